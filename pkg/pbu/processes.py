'''
processes
=========

The following methods allow for interaction with the unified process models
of a workspace: structural validation, node counts, the textual and neutral
XML exports, and the granularity operations that refine a process after it
has been mapped.

Methods available on ``pbu.processes``:

.. rst-class:: hide-signature
.. autoclass:: ProcessesAPI

    .. automethod:: census
    .. automethod:: create_staging
    .. automethod:: decompose_activity
    .. automethod:: export_textual
    .. automethod:: export_xml
    .. automethod:: import_xml
    .. automethod:: split_data_object
    .. automethod:: split_role
    .. automethod:: validate

.. autoclass:: ProcessValidationReport
.. autoclass:: NodeCensus
'''
from collections import Counter, deque
from dataclasses import dataclass, replace
import xml.etree.ElementTree as ET
from .base import UnifierEndpoint
from .errors import (
    BadPartition, EmptyChildren, InvalidProcess, MissingReassignment,
    NotAnActivity, NotADataObject, NotARole, UnexpectedValueError)
from .model import (
    FLOW_KINDS, ITEM_KINDS, NODE_KINDS, Finding, ProcessEdge, ProcessModel,
    ProcessNode, VerificationReport, containment_cycles)
from .utils import fresh_id
from .workspace import join_list

# Nodes that may carry data and performers besides the flow nodes.
_WORK_KINDS = set(FLOW_KINDS) | {'process'}


@dataclass(frozen=True)
class ProcessValidationReport(VerificationReport):
    '''
    The structural findings of a process.  Every process finding is an
    error; an empty report means the process passes validation.
    '''


@dataclass(frozen=True)
class NodeCensus:
    '''
    Attributes:
        process_id (str): The counted process.
        counts (dict): Node kind to count, for every node kind.
        criteria_items (int): Total items over all criteria-set nodes.
    '''
    process_id: str
    counts: dict
    criteria_items: int

    @property
    def total(self):
        return sum(self.counts.values())

    def __getitem__(self, kind):
        return self.counts.get(kind, 0)


def _error(code, subjects, message):
    return Finding('error', code, subjects, message)


def _structure_findings(process):
    nodes = process.node_index()
    findings = []
    for node_id in sorted(containment_cycles(
            {n.id: n.parent_id for n in process.nodes})):
        findings.append(_error('ContainmentCycle', (node_id,),
            'node {} is its own ancestor'.format(node_id)))
    roots = []
    for node in process.nodes:
        if node.parent_id is None:
            roots.append(node.id)
            if node.kind in ('activity', 'gateway'):
                findings.append(_error('MissingParent', (node.id,),
                    '{} {} has no parent'.format(node.kind, node.id)))
        elif node.parent_id not in nodes:
            findings.append(_error('DanglingParent', (node.id, node.parent_id),
                'parent {} of {} does not exist'.format(node.parent_id,
                                                        node.id)))
        if node.kind not in ITEM_KINDS and node.items:
            findings.append(_error('MisplacedItems', (node.id,),
                'a {} node carries no items'.format(node.kind)))
    if not roots:
        findings.append(_error('MissingRoot', (process.process_id,),
            'process {} has no root node'.format(process.process_id)))
    elif len(roots) > 1:
        findings.append(_error('MultipleRoots', tuple(roots),
            'process {} has {} parentless nodes'.format(process.process_id,
                                                        len(roots))))
    elif nodes[roots[0]].kind != 'process':
        findings.append(_error('RootNotProcess', (roots[0],),
            'root {} is a {}, not a process'.format(roots[0],
                                                   nodes[roots[0]].kind)))
    return findings


def _edge_findings(process):
    nodes = process.node_index()
    findings, outgoing = [], Counter()
    for edge in process.edges:
        ends = (edge.from_id, edge.to_id)
        missing = [n for n in ends if n not in nodes]
        if missing:
            findings.append(_error('DanglingEdge', ends,
                '{} edge names missing node {}'.format(edge.relation,
                                                       missing[0])))
            continue
        src, dst = nodes[edge.from_id], nodes[edge.to_id]
        if edge.relation == 'sequence':
            outgoing[src.id] += 1
            kinds_ok = src.kind in FLOW_KINDS and dst.kind in FLOW_KINDS
            if kinds_ok and src.parent_id != dst.parent_id:
                findings.append(_error('CrossScopeSequence', ends,
                    'sequence {} -> {} crosses scopes'.format(*ends)))
        elif edge.relation == 'performs':
            kinds_ok = src.kind == 'role' and dst.kind in _WORK_KINDS
        elif edge.relation == 'input':
            kinds_ok = src.kind == 'data-object' and dst.kind in _WORK_KINDS
        else:
            kinds_ok = src.kind in _WORK_KINDS and dst.kind == 'data-object'
        if not kinds_ok:
            findings.append(_error('EdgeEndpointKind', ends,
                '{} edge cannot join a {} to a {}'.format(edge.relation,
                                                         src.kind, dst.kind)))
        if edge.guard is not None and (edge.relation != 'sequence'
                                       or src.kind != 'gateway'):
            findings.append(_error('MisplacedGuard', ends,
                'guard {!r} on an edge not leaving a gateway'.format(
                    edge.guard)))
    for node in process.nodes:
        if node.kind == 'gateway' and outgoing[node.id] < 2:
            findings.append(_error('GatewayDegree', (node.id,),
                'gateway {} has {} outgoing flows'.format(node.id,
                                                         outgoing[node.id])))
    return findings


def _reachability_findings(process):
    nodes = process.node_index()
    successors = {}
    for edge in process.edges:
        if edge.relation == 'sequence' and edge.to_id in nodes:
            successors.setdefault(edge.from_id, []).append(edge.to_id)
    scopes = {}
    for node in process.nodes:
        if node.kind in FLOW_KINDS:
            scopes.setdefault(node.parent_id, []).append(node)
    findings = []
    for members in scopes.values():
        starts = [n.id for n in members if n.kind == 'start-event']
        if not starts:
            continue
        seen, queue = set(starts), deque(starts)
        while queue:
            for nxt in successors.get(queue.popleft(), ()):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        for node in members:
            if node.id not in seen:
                findings.append(_error('Unreachable', (node.id,),
                    '{} {} cannot be reached from the start of its '
                    'scope'.format(node.kind, node.id)))
    return findings


def validate_process(process):
    '''
    Checks the structural rules of a process model.

    Args:
        process (ProcessModel): The process to check.

    Returns:
        :obj:`ProcessValidationReport`
    '''
    return ProcessValidationReport(tuple(_structure_findings(process)
                                         + _edge_findings(process)
                                         + _reachability_findings(process)))


class ProcessesAPI(UnifierEndpoint):
    def validate(self, process_id):
        '''
        Validates the structure of a process.

        Args:
            process_id (str): The process to validate.

        Returns:
            :obj:`ProcessValidationReport`

        Examples:
            >>> report = pbu.processes.validate('peer-review')
            >>> len(report)
            0
        '''
        self._api._trace('processes.validate', process_id=process_id)
        return validate_process(self._process(process_id))

    def census(self, process_id):
        '''
        Counts the nodes of a process per kind.

        Args:
            process_id (str): The process to count.

        Returns:
            :obj:`NodeCensus`

        Examples:
            >>> pbu.processes.census('peer-review')['subprocess']
            13
        '''
        process = self._process(process_id)
        counts = Counter(n.kind for n in process.nodes)
        return NodeCensus(process_id, {k: counts[k] for k in NODE_KINDS},
            sum(len(n.items) for n in process.nodes
                if n.kind == 'criteria-set'))

    def _valid(self, process_id):
        process = self._process(process_id)
        report = validate_process(process)
        if report.errors:
            raise InvalidProcess(process_id, report.errors)
        return process

    def export_textual(self, process_id):
        '''
        Renders a process in the tabular textual representation: one table
        per process and subprocess, activity, data object and role, each row
        written as ``<label>: <value>``, tables separated by a blank line.

        Args:
            process_id (str): The process to export.

        Returns:
            :obj:`str`: The document.

        Examples:
            >>> print(pbu.processes.export_textual('peer-review'))
            Process ID: peer-review
            Parent ID:
            Process name: Peer Review Process
            ...
        '''
        self._api._trace('processes.export_textual', process_id=process_id)
        process = self._valid(process_id)
        nodes = process.node_index()
        notes = {}
        for mapping in self._api.workspace.mappings_for(process_id):
            if mapping.note:
                for node_id in mapping.node_ids:
                    notes.setdefault(node_id, []).append(
                        ' [{}] {}'.format(mapping.id, mapping.note))
        related = {}
        for edge in process.edges:
            if edge.relation == 'input':
                related.setdefault(('in', edge.to_id), set()).add(edge.from_id)
            elif edge.relation == 'output':
                related.setdefault(('out', edge.from_id), set()).add(edge.to_id)
            elif edge.relation == 'performs':
                related.setdefault(('by', edge.to_id), set()).add(edge.from_id)

        def names(key):
            return ', '.join(sorted(nodes[i].name or i
                                    for i in related.get(key, ())))

        def describe(node):
            return node.description + ''.join(notes.get(node.id, ()))

        def criteria(node, prefix):
            return '; '.join(item for child in process.children(node.id)
                             if child.kind == 'criteria-set'
                             and child.name.lower().startswith(prefix)
                             for item in child.items)

        root = process.root
        scopes = [root] + [n for n in process.nodes if n.kind == 'subprocess']
        tables = []
        for node in scopes:
            tables.append([
                ('Process ID', node.id),
                ('Parent ID', node.parent_id or ''),
                ('Process name', node.name),
                ('Process description', describe(node)),
                ('Entry criteria', criteria(node, 'entry')),
                ('Inputs', names(('in', node.id))),
                ('Outputs', names(('out', node.id))),
                ('Exit criteria', criteria(node, 'exit'))])
        for node in process.nodes:
            if node.kind == 'activity':
                tables.append([
                    ('Activity ID', node.id),
                    ('Parent ID', node.parent_id or ''),
                    ('Activity name', node.name),
                    ('Activity description', describe(node)),
                    ('Inputs', names(('in', node.id))),
                    ('Outputs', names(('out', node.id))),
                    ('Roles/responsibilities', names(('by', node.id)))])
        for node in process.nodes:
            if node.kind == 'data-object':
                tables.append([
                    ('Data object ID', node.id),
                    ('Data object name', node.name),
                    ('Data object description', describe(node))])
        for node in process.nodes:
            if node.kind == 'role':
                tables.append([
                    ('Role ID', node.id),
                    ('Role name', node.name),
                    ('Responsibilities', '; '.join(node.items))])
        rendered = ['\n'.join('{}: {}'.format(label, value).rstrip(' ')
                              for label, value in table) for table in tables]
        return '\n\n'.join(rendered) + '\n'

    def export_xml(self, process_id):
        '''
        Writes a process as a neutral XML document.  Nodes come first, then
        edges, each sorted, with a fixed attribute order, so equal processes
        produce identical documents.

        Args:
            process_id (str): The process to export.

        Returns:
            :obj:`str`: The XML document.

        Examples:
            >>> with open('peer-review.xml', 'w') as fobj:
            ...     fobj.write(pbu.processes.export_xml('peer-review'))
        '''
        self._api._trace('processes.export_xml', process_id=process_id)
        process = self._valid(process_id)
        root = ET.Element('process', {'id': process_id})
        for node in process.nodes:
            elem = ET.SubElement(root, 'node')
            elem.set('id', node.id)
            elem.set('kind', node.kind)
            if node.parent_id is not None:
                elem.set('parent_id', node.parent_id)
            elem.set('name', node.name)
            elem.set('description', node.description)
            if node.items is not None:
                elem.set('items', join_list(node.items))
        for edge in process.edges:
            elem = ET.SubElement(root, 'edge')
            elem.set('from', edge.from_id)
            elem.set('to', edge.to_id)
            elem.set('relation', edge.relation)
            if edge.guard is not None:
                elem.set('guard', edge.guard)
        ET.indent(root)
        # Raw tabs and carriage returns only occur inside attribute values.
        body = ET.tostring(root, encoding='unicode').replace(
            '\t', '&#09;').replace('\r', '&#13;')
        return '<?xml version="1.0" encoding="UTF-8"?>\n{}\n'.format(body)

    def import_xml(self, document, replace_existing=False):
        '''
        Reads a neutral XML export into the workspace.  Requires the
        ``defusedxml`` package.

        Args:
            document (File object, path or str): The XML document.
            replace_existing (bool, optional):
                Overwrite a process with the same id.  Defaults to ``False``.

        Returns:
            :obj:`str`: The id of the imported process.
        '''
        from .formats.neutralxml import NeutralXMLReader
        process = NeutralXMLReader(document).process()
        self._api._trace('processes.import_xml',
                         process_id=process.process_id)
        ws = self._api.workspace
        if ws.process(process.process_id) and not replace_existing:
            raise UnexpectedValueError('process {} already exists'.format(
                process.process_id))
        report = validate_process(process)
        if report.errors:
            raise InvalidProcess(process.process_id, report.errors)
        processes = tuple(p for p in ws.processes
                          if p.process_id != process.process_id)
        self._api._commit(replace(ws, processes=processes + (process,)), [(
            'import/{}'.format(process.process_id),
            'imported process {} ({} nodes)'.format(process.process_id,
                                                    len(process.nodes)),
            'process model exchanged as neutral XML')])
        return process.process_id

    def create_staging(self, approach_id):
        '''
        Creates the empty staging process ``staging-<approach_id>`` in which
        one quality approach is modelled before unification.

        Args:
            approach_id (str): The approach to stage.

        Returns:
            :obj:`str`: The id of the new process.

        Examples:
            >>> pbu.processes.create_staging('ieee-1028')
            'staging-ieee-1028'
        '''
        self._api._trace('processes.create_staging', approach_id=approach_id)
        record = self._approach(approach_id)
        pid = 'staging-{}'.format(approach_id)
        ws = self._api.workspace
        if ws.process(pid):
            raise UnexpectedValueError('process {} already exists'.format(pid))
        root = ProcessNode(pid, 'process', '{} (staging)'.format(
            record.approach.name))
        self._api._commit(replace(ws, processes=ws.processes + (
            ProcessModel(pid, (root,)),)), [(
            'staging/{}'.format(approach_id),
            'created staging process {}'.format(pid),
            'each approach is modelled as a process before unification')])
        return pid

    def _replace_process(self, process, entry):
        ws = self._api.workspace
        processes = tuple(process if p.process_id == process.process_id else p
                          for p in ws.processes)
        self._api._commit(replace(ws, processes=processes), [entry])

    def decompose_activity(self, process_id, activity_id, children,
                           rationale='activity refined into a subprocess'):
        '''
        Replaces an activity by a subprocess of the same id.  A start event,
        the given children in sequence and an end event are created inside
        it.  Mappings and performs, input and output edges keep pointing at
        the same id.

        Args:
            process_id (str): The process holding the activity.
            activity_id (str): The activity to decompose.
            children (list):
                ``(kind, name)`` pairs, ``kind`` being ``activity`` or
                ``gateway``, in flow order.
            rationale (str, optional): Recorded with the decision.

        Returns:
            :obj:`tuple`: The ids of the created children, in order.

        Examples:
            >>> pbu.processes.decompose_activity('peer-review', 'rework',
            ...     [('activity', 'Fix major defects'),
            ...      ('activity', 'Fix minor defects')])
            ('rework.1', 'rework.2')
        '''
        self._api._trace('processes.decompose_activity',
            process_id=process_id, activity_id=activity_id,
            children=[list(c) for c in children or ()])
        process = self._process(process_id)
        node = process.node(activity_id)
        if node is None or node.kind != 'activity':
            raise NotAnActivity('{} is not an activity of {}'.format(
                activity_id, process_id))
        if not children:
            raise EmptyChildren('decomposing {} needs at least one '
                                'child'.format(activity_id))
        for kind, name in children:
            self._check('kind', kind, str, choices=['activity', 'gateway'])
            self._check('name', name, str)
        taken = set(process.node_index())
        created = []

        def claim(base, kind, name=''):
            node_id = fresh_id(taken, base)
            taken.add(node_id)
            created.append(ProcessNode(node_id, kind, name,
                                       parent_id=activity_id))
            return node_id

        chain = [claim('{}.start'.format(activity_id), 'start-event', 'Start')]
        for idx, (kind, name) in enumerate(children, 1):
            chain.append(claim('{}.{}'.format(activity_id, idx), kind,
                               name or ''))
        chain.append(claim('{}.end'.format(activity_id), 'end-event', 'End'))
        edges = tuple(ProcessEdge(a, b, 'sequence')
                      for a, b in zip(chain, chain[1:]))
        nodes = tuple(replace(n, kind='subprocess') if n.id == activity_id
                      else n for n in process.nodes)
        self._replace_process(replace(process, nodes=nodes + tuple(created),
                                      edges=process.edges + edges), (
            'decompose/{}'.format(process_id),
            'decomposed {} into {} children'.format(activity_id,
                                                   len(children)),
            rationale))
        return tuple(chain[1:-1])

    def _split(self, process_id, node_id, kind, missing, relations,
               partition, new_name, reassignment):
        process = self._process(process_id)
        node = process.node(node_id)
        if node is None or node.kind != kind:
            raise missing('{} is not a {} of {}'.format(node_id, kind,
                                                        process_id))
        try:
            first, second = (set(side) for side in partition)
        except (TypeError, ValueError):
            raise BadPartition('partition must be two sets of item indexes')
        everything = set(range(len(node.items)))
        if (len(node.items) < 2 or not first or not second or first & second
                or first | second != everything):
            raise BadPartition('{} items of {} are not split into two '
                'disjoint non-empty sides'.format(len(node.items), node_id))
        reassignment = dict(reassignment or {})
        keys = []
        for edge in process.edges:
            if edge.relation not in relations:
                continue
            if edge.from_id == node_id:
                keys.append((edge.relation, edge.to_id))
            elif edge.to_id == node_id:
                keys.append((edge.relation, edge.from_id))
        unassigned = [k for k in keys if k not in reassignment]
        if unassigned:
            raise MissingReassignment(unassigned)
        for key, side in reassignment.items():
            if key not in keys:
                raise UnexpectedValueError('{} is not an edge of {}'.format(
                    key, node_id))
            self._check('side', side, int, choices=[1, 2])
        new_id = fresh_id(set(process.node_index()), '{}.split'.format(node_id))
        kept = replace(node, items=tuple(i for n, i in enumerate(node.items)
                                         if n in first))
        split = ProcessNode(new_id, kind, new_name, node.description,
            node.parent_id, tuple(i for n, i in enumerate(node.items)
                                  if n in second))

        def reroute(edge):
            if edge.relation not in relations:
                return edge
            if edge.from_id == node_id and reassignment[
                    (edge.relation, edge.to_id)] == 2:
                return replace(edge, from_id=new_id)
            if edge.to_id == node_id and reassignment[
                    (edge.relation, edge.from_id)] == 2:
                return replace(edge, to_id=new_id)
            return edge

        nodes = tuple(kept if n.id == node_id else n for n in process.nodes)
        self._replace_process(replace(process, nodes=nodes + (split,),
            edges=tuple(reroute(e) for e in process.edges)), (
            'split/{}'.format(process_id),
            'split {} into {} and {}'.format(node_id, node_id, new_id),
            '{} items divided {}/{}'.format(kind, len(first), len(second))))
        return new_id

    def split_role(self, process_id, role_id, partition, new_role_name,
                   reassignment=None):
        '''
        Divides the responsibilities of a role between the role and a new
        one.

        Args:
            process_id (str): The process holding the role.
            role_id (str): The role to split.
            partition (tuple):
                Two disjoint, non-empty sets of responsibility indexes
                (0-based) that together cover every responsibility.  The
                role keeps the first side; the new role gets the second.
            new_role_name (str): The name of the new role.
            reassignment (dict):
                ``('performs', node_id)`` to ``1`` or ``2``, one entry per
                performs edge of the role, naming the side that keeps it.

        Returns:
            :obj:`str`: The id of the new role.

        Examples:
            >>> pbu.processes.split_role('peer-review', 'role-moderator',
            ...     ({0, 1, 2, 3, 4}, {5, 6, 7}), 'Inspection planner',
            ...     {('performs', 'schedule-meeting'): 2, ...})
            'role-moderator.split'
        '''
        self._api._trace('processes.split_role', process_id=process_id,
                         role_id=role_id, new_role_name=new_role_name)
        new_role_name = self._check('new_role_name', new_role_name, str)
        return self._split(process_id, role_id, 'role', NotARole,
                           ('performs',), partition, new_role_name,
                           reassignment)

    def split_data_object(self, process_id, object_id, partition,
                          new_object_name, reassignment=None):
        '''
        Divides the data items of a data object between the object and a new
        one.  Works like :meth:`split_role`, with ``('input', node_id)`` and
        ``('output', node_id)`` reassignment keys.

        Returns:
            :obj:`str`: The id of the new data object.
        '''
        self._api._trace('processes.split_data_object',
            process_id=process_id, object_id=object_id,
            new_object_name=new_object_name)
        new_object_name = self._check('new_object_name', new_object_name, str)
        return self._split(process_id, object_id, 'data-object',
                           NotADataObject, ('input', 'output'), partition,
                           new_object_name, reassignment)
