'''
mappings
========

The following methods allow for creating, classifying, verifying and tracing
the mappings between quality approach element instances and the nodes of a
unified process.

Methods available on ``pbu.mappings``:

.. rst-class:: hide-signature
.. autoclass:: MappingsAPI

    .. automethod:: add
    .. automethod:: classify
    .. automethod:: count_candidates
    .. automethod:: for_approach
    .. automethod:: list
    .. automethod:: remove
    .. automethod:: trace_to_process
    .. automethod:: trace_to_sources
    .. automethod:: verify

.. autoclass:: MappingKind
.. autofunction:: classify_mapping
.. autofunction:: count_candidate_mappings
'''
from dataclasses import replace
from enum import Enum
from math import comb
import re
from .base import UnifierEndpoint
from .errors import (
    BadPrimary, EmptySide, Overflow, UnexpectedValueError, UnknownMapping,
    UnknownSource, UnknownTarget)
from .model import Finding, Mapping, VerificationReport

CHECKED_INTEGER_MAX = 2 ** 63 - 1


class MappingKind(Enum):
    ELEMENTARY = 'elementary'
    ONE_TO_MANY = 'complex_one_to_many'
    MANY_TO_ONE = 'complex_many_to_one'
    MANY_TO_MANY = 'complex_many_to_many'


def classify_mapping(mapping):
    '''
    Classifies a mapping by the cardinality of its two sides.

    Args:
        mapping (Mapping): The mapping to classify.

    Returns:
        :obj:`MappingKind`

    Examples:
        >>> classify_mapping(Mapping('m', {'pi42'}, {'present-product'}))
        <MappingKind.ELEMENTARY: 'elementary'>
    '''
    sources, targets = len(mapping.qa_ids), len(mapping.node_ids)
    if sources == 1 and targets == 1:
        return MappingKind.ELEMENTARY
    if sources == 1:
        return MappingKind.ONE_TO_MANY
    if targets == 1:
        return MappingKind.MANY_TO_ONE
    return MappingKind.MANY_TO_MANY


def count_candidate_mappings(n, m, x):
    '''
    Number of candidate ``1:x`` and ``x:1`` mappings between a set of ``n``
    and a set of ``m`` elements: ``n * C(m, x) + m * C(n, x)``.

    The formula is evaluated as written, so with ``x = 1`` every single pair
    is counted once per direction.

    Args:
        n (int): Size of the first set.
        m (int): Size of the second set.
        x (int): Size of the grouped side.

    Returns:
        :obj:`int`

    Raises:
        Overflow: The exact count exceeds a signed 64-bit integer.

    Examples:
        >>> count_candidate_mappings(3, 2, 2)
        9
    '''
    for name, value in (('n', n), ('m', m), ('x', x)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError('{} is of type {}.  Expected int.'.format(
                name, value.__class__.__name__))
        if value < 0:
            raise UnexpectedValueError(
                '{} has value of {}.  Expected a count >= 0'.format(
                    name, value))
    total = n * comb(m, x) + m * comb(n, x)
    if total > CHECKED_INTEGER_MAX:
        raise Overflow('candidate mapping count for n={}, m={}, x={} '
                       'exceeds {}'.format(n, m, x, CHECKED_INTEGER_MAX))
    return total


def retire_exclusions(ws, qa_ids, mapping_id):
    '''
    Drops the exclusions of instances that ``mapping_id`` now maps.

    Returns:
        :obj:`tuple`:
            The new exclusions dict and one decision entry per retired
            exclusion.
    '''
    instances = ws.instance_index()
    exclusions, entries = dict(ws.exclusions), []
    for qa_id in sorted(qa_ids):
        aid = instances[qa_id].approach_id
        current = exclusions.get(aid, ())
        if any(e.qa_id == qa_id for e in current):
            exclusions[aid] = tuple(e for e in current if e.qa_id != qa_id)
            entries.append(('exclude/{}'.format(aid),
                'retired exclusion of {}'.format(qa_id),
                'instance is now mapped by {}'.format(mapping_id)))
    return exclusions, entries


class MappingsAPI(UnifierEndpoint):
    def classify(self, mapping):
        '''
        Classifies a mapping.  See :func:`classify_mapping`.

        Args:
            mapping (Mapping): The mapping to classify.

        Returns:
            :obj:`MappingKind`
        '''
        return classify_mapping(mapping)

    def count_candidates(self, n, m, x):
        '''
        Counts the candidate mappings.  See :func:`count_candidate_mappings`.
        '''
        return count_candidate_mappings(n, m, x)

    def list(self, process_id):
        '''
        Lists the mappings of a process.

        Args:
            process_id (str): The process identifier.

        Returns:
            :obj:`tuple`: :class:`pbu.model.Mapping` records sorted by id.

        Examples:
            >>> for mapping in pbu.mappings.list('peer-review'):
            ...     print(mapping.id, sorted(mapping.qa_ids))
        '''
        self._process(self._check('process_id', process_id, 'identifier'))
        return self._api.workspace.mappings_for(process_id)

    def _next_id(self, process_id):
        numbers = [int(n) for m in self._api.workspace.mappings_for(process_id)
                   for n in re.findall(r'^m-(\d+)$', m.id)]
        return 'm-{:04d}'.format(max(numbers, default=0) + 1)

    def add(self, process_id, qa_ids, node_ids, primary_source=None, note=''):
        '''
        Maps a set of quality approach element instances onto a set of
        process nodes.  Any exclusion recorded for one of the instances is
        retired, as a mapped instance can no longer be excluded.

        Args:
            process_id (str): The process holding the nodes.
            qa_ids (list): The element instance identifiers.
            node_ids (list): The process node identifiers.
            primary_source (str, optional):
                The strongest of the instances, used as the lead source.
            note (str, optional): Free-form mapping documentation.

        Returns:
            :obj:`str`: The new mapping id, e.g. ``m-0042``.

        Examples:
            >>> pbu.mappings.add('peer-review', ['IEEE1028-2008 6.5.3 1'],
            ...     ['assign-roles'], note='inspection leader assigns roles')
            'm-0126'
        '''
        self._api._trace('mappings.add', process_id=process_id,
            qa_ids=qa_ids, node_ids=node_ids, primary_source=primary_source)
        process = self._process(self._check('process_id', process_id,
                                            'identifier'))
        qa_ids = set(self._check('qa_ids', qa_ids,
                                 (list, tuple, set, frozenset)))
        node_ids = set(self._check('node_ids', node_ids,
                                   (list, tuple, set, frozenset)))
        note = self._check('note', note, str, default='')
        if not qa_ids or not node_ids:
            raise EmptySide('a mapping needs at least one instance and one '
                            'process node')
        ws = self._api.workspace
        instances = ws.instance_index()
        for qa_id in sorted(qa_ids):
            if qa_id not in instances:
                raise UnknownSource('instance {!r} does not exist'.format(qa_id))
        known = process.node_index()
        for node_id in sorted(node_ids):
            if node_id not in known:
                raise UnknownTarget('node {!r} does not exist in {}'.format(
                    node_id, process_id))
        if primary_source is not None and primary_source not in qa_ids:
            raise BadPrimary('primary source {!r} is not one of the mapped '
                             'instances'.format(primary_source))

        mapping_id = self._next_id(process_id)
        mapping = Mapping(mapping_id, qa_ids, node_ids, primary_source, note)
        mappings = dict(ws.mappings)
        mappings[process_id] = mappings.get(process_id, ()) + (mapping,)
        entries = [('map/{}'.format(process_id),
                    'mapped {} to {} as {}'.format(
                        ', '.join(sorted(qa_ids)), ', '.join(sorted(node_ids)),
                        mapping_id),
                    note or 'mapping recorded')]

        exclusions, retired = retire_exclusions(ws, qa_ids, mapping_id)
        entries.extend(retired)
        self._api._commit(replace(ws, mappings=mappings,
                                  exclusions=exclusions), entries)
        return mapping_id

    def remove(self, process_id, mapping_id, rationale='mapping withdrawn'):
        '''
        Removes a mapping from a process.

        Args:
            process_id (str): The process holding the mapping.
            mapping_id (str): The mapping to remove.
            rationale (str, optional): Recorded in the decision ledger.

        Returns:
            :obj:`Mapping`: The removed mapping.

        Examples:
            >>> pbu.mappings.remove('peer-review', 'm-0012')
        '''
        self._api._trace('mappings.remove', process_id=process_id,
                         mapping_id=mapping_id)
        self._process(self._check('process_id', process_id, 'identifier'))
        ws = self._api.workspace
        current = ws.mappings_for(process_id)
        found = [m for m in current if m.id == mapping_id]
        if not found:
            raise UnknownMapping('mapping {!r} does not exist in {}'.format(
                mapping_id, process_id))
        mappings = dict(ws.mappings)
        mappings[process_id] = tuple(m for m in current if m.id != mapping_id)
        self._api._commit(replace(ws, mappings=mappings), [(
            'map/{}'.format(process_id),
            'removed mapping {}'.format(mapping_id), rationale)])
        return found[0]

    def verify(self, process_id):
        '''
        Checks that the mappings of a process are consistent with the
        workspace.

        Errors are reported for references to instances or nodes that do not
        exist (one finding per missing identifier, naming every mapping that
        references it), for primary sources outside their mapping, for empty
        sides and for instances that are both mapped and excluded.  Two
        mappings with identical sides produce a warning.

        Args:
            process_id (str): The process to verify.

        Returns:
            :obj:`pbu.model.VerificationReport`

        Examples:
            >>> report = pbu.mappings.verify('peer-review')
            >>> len(report.errors)
            0
        '''
        self._api._trace('mappings.verify', process_id=process_id)
        process = self._process(process_id)
        ws = self._api.workspace
        instances = ws.instance_index()
        nodes = process.node_index()
        excluded = ws.excluded_ids()
        findings = []
        missing_sources, missing_targets, both = {}, {}, {}
        groups = {}

        for mapping in ws.mappings_for(process_id):
            if not mapping.qa_ids or not mapping.node_ids:
                findings.append(Finding('error', 'EmptySide', (mapping.id,),
                    'mapping {} has an empty side'.format(mapping.id)))
            if (mapping.primary_source is not None
                    and mapping.primary_source not in mapping.qa_ids):
                findings.append(Finding('error', 'BadPrimary',
                    (mapping.id, mapping.primary_source),
                    'primary source {} of mapping {} is not one of its '
                    'instances'.format(mapping.primary_source, mapping.id)))
            for qa_id in mapping.qa_ids:
                if qa_id not in instances:
                    missing_sources.setdefault(qa_id, []).append(mapping.id)
                if qa_id in excluded:
                    both.setdefault(qa_id, []).append(mapping.id)
            for node_id in mapping.node_ids:
                if node_id not in nodes:
                    missing_targets.setdefault(node_id, []).append(mapping.id)
            groups.setdefault((mapping.qa_ids, mapping.node_ids),
                              []).append(mapping.id)

        for code, what, table in (
                ('DanglingSource', 'instance', missing_sources),
                ('DanglingTarget', 'node', missing_targets)):
            for ident, mapping_ids in table.items():
                findings.append(Finding('error', code,
                    (ident,) + tuple(sorted(mapping_ids)),
                    '{} {} referenced by {} does not exist'.format(
                        what, ident, ', '.join(sorted(mapping_ids)))))
        for qa_id, mapping_ids in both.items():
            findings.append(Finding('error', 'MappedAndExcluded',
                (qa_id,) + tuple(sorted(mapping_ids)),
                'instance {} is mapped by {} and also excluded'.format(
                    qa_id, ', '.join(sorted(mapping_ids)))))
        for mapping_ids in groups.values():
            if len(mapping_ids) > 1:
                findings.append(Finding('warning', 'DuplicateMapping',
                    tuple(sorted(mapping_ids)),
                    'mappings {} have identical sides'.format(
                        ', '.join(sorted(mapping_ids)))))
        return VerificationReport(tuple(findings))

    def trace_to_process(self, qa_id, process_id=None):
        '''
        Follows an element instance forward to the process nodes it is
        mapped to.

        Args:
            qa_id (str): The element instance identifier.
            process_id (str, optional):
                Restrict the trace to one process.  By default every process
                is searched.

        Returns:
            :obj:`set`: Node identifiers, empty when the instance is unmapped.

        Examples:
            >>> pbu.mappings.trace_to_process('IEEE1028-2008 6.5.3 1')
            {'assign-roles'}
        '''
        self._api._trace('mappings.trace_to_process', qa_id=qa_id)
        ws = self._api.workspace
        if qa_id not in ws.instance_index():
            raise UnknownSource('instance {!r} does not exist'.format(qa_id))
        if process_id is not None:
            self._process(process_id)
        nodes = set()
        for pid, mapping in ws.all_mappings():
            if process_id in (None, pid) and qa_id in mapping.qa_ids:
                nodes.update(mapping.node_ids)
        return nodes

    def trace_to_sources(self, node_id, process_id=None):
        '''
        Follows a process node back to the element instances mapped onto it.

        Args:
            node_id (str): The process node identifier.
            process_id (str, optional):
                The process holding the node.  By default every process that
                has a node with this identifier is searched.

        Returns:
            :obj:`dict`:
                Approach id to the sorted list of instance ids, with the
                approaches in sorted order.

        Examples:
            >>> pbu.mappings.trace_to_sources('assign-roles')
            {'cmmi-dev': ['VER GP 2.4', 'VER GP 2.7'],
             'ieee-1028': ['IEEE1028-2008 6.5.3 1']}
        '''
        self._api._trace('mappings.trace_to_sources', node_id=node_id)
        ws = self._api.workspace
        if process_id is not None:
            holders = [self._process(process_id)]
        else:
            holders = list(ws.processes)
        holders = [p.process_id for p in holders if p.node(node_id)]
        if not holders:
            raise UnknownTarget('node {!r} does not exist'.format(node_id))
        instances = ws.instance_index()
        grouped = {}
        for pid, mapping in ws.all_mappings():
            if pid in holders and node_id in mapping.node_ids:
                for qa_id in mapping.qa_ids:
                    if qa_id in instances:
                        grouped.setdefault(instances[qa_id].approach_id,
                                           set()).add(qa_id)
        return {aid: sorted(grouped[aid]) for aid in sorted(grouped)}

    def for_approach(self, approach_id, process_id):
        '''
        The per-approach view of a process's mappings: every mapping that
        references the approach, restricted to that approach's instances.

        Args:
            approach_id (str): The quality approach.
            process_id (str): The process.

        Returns:
            :obj:`list`: :class:`pbu.model.Mapping` records, sorted by id.
        '''
        record = self._approach(approach_id)
        self._process(process_id)
        local = {i.id for i in record.instances}
        view = []
        for mapping in self._api.workspace.mappings_for(process_id):
            keep = mapping.qa_ids & local
            if keep:
                primary = (mapping.primary_source
                           if mapping.primary_source in keep else None)
                view.append(replace(mapping, qa_ids=keep,
                                    primary_source=primary))
        return view
