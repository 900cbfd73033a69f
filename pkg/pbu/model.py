'''
model
=====

The shared vocabulary of pyPBU: quality approaches and their element
instances on one side, the unified process model on the other, and the
mappings, exclusions and decisions that connect them.

Every type in this module is an immutable value.  Collections held by the
container types are normalised to sorted tuples on construction, so two
values holding the same records compare equal no matter the order in which
they were built.

.. autoclass:: ConformanceLevel
.. autoclass:: QualityApproach
.. autoclass:: ElementKind
.. autoclass:: QAInstance
.. autoclass:: QARelation
.. autoclass:: ProcessNode
.. autoclass:: ProcessEdge
.. autoclass:: Mapping
.. autoclass:: Exclusion
.. autoclass:: Decision
.. autoclass:: ApproachRecord
.. autoclass:: ProcessModel
.. autoclass:: Workspace
.. autoclass:: Finding
.. autoclass:: VerificationReport
.. autofunction:: validate_identifier
.. autofunction:: normalize_conformance
'''
from dataclasses import dataclass, field
from enum import Enum
from .errors import UnknownConformance

NODE_KINDS = ('process', 'subprocess', 'activity', 'gateway', 'start-event',
              'end-event', 'data-object', 'role', 'criteria-set')
FLOW_KINDS = ('activity', 'subprocess', 'gateway', 'start-event', 'end-event')
ITEM_KINDS = ('role', 'data-object', 'criteria-set')
EDGE_RELATIONS = ('sequence', 'performs', 'input', 'output')
RELATION_TYPES = ('part-of', 'refers-to', 'requires', 'version-of')
PROCESS_TARGETS = ('process', 'subprocess', 'activity', 'gateway',
                   'data-object', 'role', 'criteria')


class ConformanceLevel(Enum):
    '''
    Requirement strength of a quality approach element instance.  The members
    are ordered by severity: mandatory, recommendation, optional, unspecified.
    '''
    MANDATORY = 'mandatory'
    RECOMMENDATION = 'recommendation'
    OPTIONAL = 'optional'
    UNSPECIFIED = 'unspecified'

    @property
    def severity(self):
        return _SEVERITY[self]

    def at_least(self, other):
        '''
        Is this level at or above ``other`` in severity?
        '''
        return self.severity >= other.severity


_SEVERITY = {
    ConformanceLevel.MANDATORY: 3,
    ConformanceLevel.RECOMMENDATION: 2,
    ConformanceLevel.OPTIONAL: 1,
    ConformanceLevel.UNSPECIFIED: 0,
}

_KEYWORDS = {
    'shall': ConformanceLevel.MANDATORY,
    'should': ConformanceLevel.RECOMMENDATION,
    'may': ConformanceLevel.OPTIONAL,
    '': ConformanceLevel.UNSPECIFIED,
}


def validate_identifier(raw):
    '''
    Checks that a string may be used as an identifier in a workspace.

    Args:
        raw (str): The candidate identifier.

    Returns:
        :obj:`bool`:
            ``True`` when the identifier is nonempty, holds no tab, newline or
            carriage return, and has no leading or trailing whitespace.

    Examples:
        >>> validate_identifier('VER SP2.1 SUBP1')
        True
        >>> validate_identifier('a\\tb')
        False
    '''
    if not isinstance(raw, str) or raw == '':
        return False
    if any(c in raw for c in '\t\n\r'):
        return False
    return raw == raw.strip()


def normalize_conformance(raw):
    '''
    Converts a conformance keyword into a :class:`ConformanceLevel`.

    The keywords ``shall``, ``should`` and ``may`` are matched without regard
    to case, the empty string means unspecified, and the canonical level names
    are accepted as well so that the conversion is idempotent.

    Args:
        raw (str): The keyword to convert.

    Returns:
        :obj:`ConformanceLevel`

    Examples:
        >>> normalize_conformance('MAY')
        <ConformanceLevel.OPTIONAL: 'optional'>
    '''
    if isinstance(raw, ConformanceLevel):
        return raw
    token = str(raw).strip().lower()
    if token in _KEYWORDS:
        return _KEYWORDS[token]
    for level in ConformanceLevel:
        if token == level.value:
            return level
    raise UnknownConformance(
        'conformance keyword {!r} is not one of shall, should, may'.format(raw))


def containment_cycles(parents):
    '''
    Finds the identifiers that sit on a cycle of a parent mapping.

    Args:
        parents (dict): Identifier to parent identifier (or ``None``).

    Returns:
        :obj:`set`: Every identifier that is its own ancestor.
    '''
    on_cycle = set()
    settled = set()
    for start in parents:
        path = []
        seen = {}
        node = start
        while node is not None and node in parents and node not in settled:
            if node in seen:
                on_cycle.update(path[seen[node]:])
                break
            seen[node] = len(path)
            path.append(node)
            node = parents[node]
        settled.update(path)
    return on_cycle


def graph_has_cycle(edges):
    '''
    Depth-first search for a back edge in a directed graph given as
    ``(from, to)`` pairs.
    '''
    graph = {}
    for src, dst in edges:
        graph.setdefault(src, []).append(dst)
    WHITE, GREY, BLACK = 0, 1, 2
    color = {}
    for root in sorted(graph):
        if color.get(root, WHITE) != WHITE:
            continue
        stack = [(root, iter(graph.get(root, ())))]
        color[root] = GREY
        while stack:
            node, children = stack[-1]
            child = next(children, None)
            if child is None:
                color[node] = BLACK
                stack.pop()
            elif color.get(child, WHITE) == GREY:
                return True
            elif color.get(child, WHITE) == WHITE:
                color[child] = GREY
                stack.append((child, iter(graph.get(child, ()))))
    return False


@dataclass(frozen=True)
class QualityApproach:
    '''
    A standard, model or method whose requirements are being unified.
    '''
    id: str
    name: str
    version_label: str = ''
    attributes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'attributes',
            tuple((str(n), str(v)) for n, v in self.attributes))


@dataclass(frozen=True)
class ElementKind:
    approach_id: str
    kind_name: str
    default_process_target: str = None


@dataclass(frozen=True)
class QAInstance:
    '''
    One decomposed fragment of a quality approach, for example the
    subpractice ``VER SP2.1 SUBP1``.
    '''
    id: str
    approach_id: str
    kind_name: str
    conformance: ConformanceLevel = ConformanceLevel.UNSPECIFIED
    text: str = ''
    parent_id: str = None
    order: int = None


@dataclass(frozen=True)
class QARelation:
    from_id: str
    to_id: str
    relation_type: str


@dataclass(frozen=True)
class ProcessNode:
    '''
    An element of the unified process.  Roles, data objects and criteria
    sets carry their responsibilities, data items or criteria as ``items``.
    '''
    id: str
    kind: str
    name: str = ''
    description: str = ''
    parent_id: str = None
    items: tuple = None

    def __post_init__(self):
        if self.items is None and self.kind in ITEM_KINDS:
            object.__setattr__(self, 'items', ())
        elif self.kind not in ITEM_KINDS and not self.items:
            object.__setattr__(self, 'items', None)
        elif self.items is not None:
            object.__setattr__(self, 'items', tuple(self.items))


@dataclass(frozen=True)
class ProcessEdge:
    from_id: str
    to_id: str
    relation: str
    guard: str = None

    @property
    def sort_key(self):
        return (self.from_id, self.to_id, self.relation, self.guard or '')


@dataclass(frozen=True)
class Mapping:
    '''
    Binds a set of quality approach element instances to a set of process
    nodes.  The instances may come from several approaches.
    '''
    id: str
    qa_ids: frozenset
    node_ids: frozenset
    primary_source: str = None
    note: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'qa_ids', frozenset(self.qa_ids))
        object.__setattr__(self, 'node_ids', frozenset(self.node_ids))


@dataclass(frozen=True)
class Exclusion:
    qa_id: str
    rationale: str


@dataclass(frozen=True)
class Decision:
    timestamp: str
    actor: str
    context: str
    decision: str
    rationale: str


@dataclass(frozen=True)
class ApproachRecord:
    '''
    A quality approach together with its element kinds, instances and
    instance relations.  This is also the snapshot that version diffs
    compare.
    '''
    approach: QualityApproach
    kinds: tuple = ()
    instances: tuple = ()
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'kinds',
            tuple(sorted(self.kinds, key=lambda k: k.kind_name)))
        object.__setattr__(self, 'instances',
            tuple(sorted(self.instances, key=lambda i: i.id)))
        object.__setattr__(self, 'relations',
            tuple(sorted(set(self.relations),
                key=lambda r: (r.from_id, r.to_id, r.relation_type))))

    @property
    def id(self):
        return self.approach.id

    def instance(self, qa_id):
        for inst in self.instances:
            if inst.id == qa_id:
                return inst
        return None


@dataclass(frozen=True)
class ProcessModel:
    process_id: str
    nodes: tuple = ()
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'nodes',
            tuple(sorted(self.nodes, key=lambda n: n.id)))
        object.__setattr__(self, 'edges',
            tuple(sorted(self.edges, key=lambda e: e.sort_key)))

    def node(self, node_id):
        for node in self.nodes:
            if node.id == node_id:
                return node
        return None

    def node_index(self):
        return {n.id: n for n in self.nodes}

    def children(self, parent_id):
        return [n for n in self.nodes if n.parent_id == parent_id]

    @property
    def root(self):
        roots = [n for n in self.nodes if n.parent_id is None]
        return roots[0] if len(roots) == 1 else None


@dataclass(frozen=True)
class Workspace:
    '''
    The complete state of a unification effort.

    Attributes:
        approaches (tuple): :class:`ApproachRecord` values, sorted by id.
        processes (tuple): :class:`ProcessModel` values, sorted by id.
        mappings (dict): Process id to a tuple of :class:`Mapping`.
        exclusions (dict): Approach id to a tuple of :class:`Exclusion`.
        decisions (tuple): The :class:`Decision` ledger in file order.
    '''
    approaches: tuple = ()
    processes: tuple = ()
    mappings: dict = field(default_factory=dict)
    exclusions: dict = field(default_factory=dict)
    decisions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'approaches',
            tuple(sorted(self.approaches, key=lambda a: a.id)))
        object.__setattr__(self, 'processes',
            tuple(sorted(self.processes, key=lambda p: p.process_id)))
        object.__setattr__(self, 'mappings', {
            pid: tuple(sorted(maps, key=lambda m: m.id))
            for pid, maps in sorted(self.mappings.items()) if maps})
        object.__setattr__(self, 'exclusions', {
            aid: tuple(sorted(excl, key=lambda e: e.qa_id))
            for aid, excl in sorted(self.exclusions.items()) if excl})
        object.__setattr__(self, 'decisions', tuple(self.decisions))

    def approach(self, approach_id):
        for record in self.approaches:
            if record.id == approach_id:
                return record
        return None

    def process(self, process_id):
        for proc in self.processes:
            if proc.process_id == process_id:
                return proc
        return None

    def instance_index(self):
        return {i.id: i for a in self.approaches for i in a.instances}

    def mappings_for(self, process_id):
        return self.mappings.get(process_id, ())

    def exclusions_for(self, approach_id):
        return self.exclusions.get(approach_id, ())

    def all_mappings(self):
        '''
        Yields ``(process_id, mapping)`` pairs across every process.
        '''
        for pid in sorted(self.mappings):
            for mapping in self.mappings[pid]:
                yield pid, mapping

    def excluded_ids(self):
        return {e.qa_id: e for excl in self.exclusions.values() for e in excl}

    def mapped_ids(self):
        return {q for _, m in self.all_mappings() for q in m.qa_ids}


@dataclass(frozen=True)
class Finding:
    '''
    One problem found by a verification or validation pass.

    Attributes:
        severity (str): ``error`` or ``warning``.
        code (str): A stable, CamelCase finding code such as ``DanglingTarget``.
        subject_ids (tuple): The identifiers the finding is about.
        message (str): A human readable explanation.
    '''
    severity: str
    code: str
    subject_ids: tuple
    message: str

    def __post_init__(self):
        object.__setattr__(self, 'subject_ids', tuple(self.subject_ids))

    @property
    def sort_key(self):
        return (0 if self.severity == 'error' else 1, self.code,
                self.subject_ids)


@dataclass(frozen=True)
class VerificationReport:
    '''
    The findings of a verification pass, errors first, then by code and
    subject.  An empty report means the subject is consistent.
    '''
    findings: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'findings',
            tuple(sorted(self.findings, key=lambda f: f.sort_key)))

    @property
    def errors(self):
        return tuple(f for f in self.findings if f.severity == 'error')

    @property
    def warnings(self):
        return tuple(f for f in self.findings if f.severity == 'warning')

    def codes(self):
        return [f.code for f in self.findings]

    def __len__(self):
        return len(self.findings)

    def __iter__(self):
        return iter(self.findings)
