'''
workspace
=========

A workspace is a directory of UTF-8, tab-separated files, one file per
entity, each starting with a header row:

.. code-block:: text

    workspace.meta                   key, value (format_version = 1)
    approaches/<aid>/approach.meta   key, value (id, name, version_label, attributes)
    approaches/<aid>/kinds.tsv       kind_name, default_process_target
    approaches/<aid>/instances.tsv   id, kind_name, conformance, parent_id, order, text
    approaches/<aid>/relations.tsv   from_id, to_id, relation_type
    processes/<pid>/nodes.tsv        id, kind, parent_id, name, description, items
    processes/<pid>/edges.tsv        from_id, to_id, relation, guard
    mappings/<pid>.tsv               id, qa_ids, node_ids, primary_source, note
    exclusions/<aid>.tsv             qa_id, rationale
    decisions.log                    timestamp, actor, context, decision, rationale

Fields are escaped with :func:`escape_field`.  List columns (``items``,
``qa_ids`` and ``node_ids``) escape every item, write a semicolon inside an
item as ``\\;`` and an empty item as ``\\\\e``, and join the items with ``;``.
An empty cell is the empty list.

.. autofunction:: escape_field
.. autofunction:: unescape_field
.. autofunction:: load_workspace
.. autofunction:: save_workspace
.. autofunction:: append_decision
.. autoclass:: WorkspaceLock
'''
import logging, os, tempfile
from dateutil.parser import isoparse
from .errors import (
    IntegrityError, IoError, MalformedEscape, ParseError,
    UnexpectedValueError, WorkspaceLocked)
from .model import (
    ApproachRecord, ConformanceLevel, Decision, EDGE_RELATIONS, ElementKind,
    Exclusion, ITEM_KINDS, Mapping, NODE_KINDS, PROCESS_TARGETS, ProcessEdge,
    ProcessModel, ProcessNode, QAInstance, QARelation, QualityApproach,
    RELATION_TYPES, Workspace, containment_cycles, graph_has_cycle,
    validate_identifier)
from .utils import utc_timestamp

FORMAT_VERSION = '1'
LOCK_NAME = '.lock'
EMPTY_ITEM = '\\e'

META_COLUMNS = ('key', 'value')
KIND_COLUMNS = ('kind_name', 'default_process_target')
INSTANCE_COLUMNS = ('id', 'kind_name', 'conformance', 'parent_id', 'order',
                    'text')
RELATION_COLUMNS = ('from_id', 'to_id', 'relation_type')
NODE_COLUMNS = ('id', 'kind', 'parent_id', 'name', 'description', 'items')
EDGE_COLUMNS = ('from_id', 'to_id', 'relation', 'guard')
MAPPING_COLUMNS = ('id', 'qa_ids', 'node_ids', 'primary_source', 'note')
EXCLUSION_COLUMNS = ('qa_id', 'rationale')
DECISION_COLUMNS = ('timestamp', 'actor', 'context', 'decision', 'rationale')

_ESCAPES = {'\\': '\\', 't': '\t', 'n': '\n', 'r': '\r'}

log = logging.getLogger(__name__)


def escape_field(raw):
    '''
    Escapes a value for storage in a tab-separated field.

    Args:
        raw (str): The value to escape.

    Returns:
        :obj:`str`:
            The value with backslash, tab, newline and carriage return written
            as ``\\\\``, ``\\t``, ``\\n`` and ``\\r``.

    Examples:
        >>> escape_field('a\\tb')
        'a\\\\tb'
    '''
    return (raw.replace('\\', '\\\\').replace('\t', '\\t')
               .replace('\n', '\\n').replace('\r', '\\r'))


def _unescape(raw, list_item=False):
    out = []
    chars = iter(raw)
    for char in chars:
        if char != '\\':
            out.append(char)
            continue
        code = next(chars, None)
        if code is None:
            raise ValueError('dangling backslash in {!r}'.format(raw))
        if code in _ESCAPES:
            out.append(_ESCAPES[code])
        elif code == ';' and list_item:
            out.append(';')
        else:
            raise ValueError('unknown escape \\{} in {!r}'.format(code, raw))
    return ''.join(out)


def unescape_field(raw):
    '''
    The exact inverse of :func:`escape_field`.

    Args:
        raw (str): An escaped field.

    Returns:
        :obj:`str`: The original value.

    Raises:
        MalformedEscape: On a dangling backslash or an unknown escape.

    Examples:
        >>> unescape_field('a\\\\tb')
        'a\\tb'
    '''
    try:
        return _unescape(raw)
    except ValueError as err:
        raise MalformedEscape(str(err))


def join_list(items):
    '''
    Encodes a list column.
    '''
    return ';'.join(escape_field(i).replace(';', '\\;') if i else EMPTY_ITEM
                    for i in items)


def _split_list(raw):
    if raw == '':
        return []
    pieces, current = [], []
    chars = iter(raw)
    for char in chars:
        if char == '\\':
            current.append(char)
            nxt = next(chars, None)
            if nxt is not None:
                current.append(nxt)
        elif char == ';':
            pieces.append(''.join(current))
            current = []
        else:
            current.append(char)
    pieces.append(''.join(current))
    return ['' if p == EMPTY_ITEM else _unescape(p, list_item=True)
            for p in pieces]


def split_list(raw):
    '''
    Decodes a list column written by :func:`join_list`.
    '''
    try:
        return _split_list(raw)
    except ValueError as err:
        raise MalformedEscape(str(err))


class _Table(object):
    '''
    Reader for one workspace file.  Rows come back as ``(line, dict)`` pairs
    with every field unescaped and list columns split.
    '''
    def __init__(self, root, relpath, columns, lists=()):
        self.relpath = relpath
        self.columns = columns
        self.lists = lists
        path = os.path.join(root, relpath)
        if not os.path.isfile(path):
            raise ParseError('file is missing', relpath)
        try:
            with open(path, encoding='utf-8', newline='') as fobj:
                text = fobj.read()
        except (OSError, UnicodeDecodeError) as err:
            raise IoError('cannot read {}: {}'.format(relpath, err))
        self.lines = text.split('\n')
        if self.lines and self.lines[-1] == '':
            self.lines.pop()

    def rows(self):
        if not self.lines or tuple(self.lines[0].split('\t')) != self.columns:
            raise ParseError('expected header {}'.format(
                '<TAB>'.join(self.columns)), self.relpath, 1)
        for lineno, line in enumerate(self.lines[1:], start=2):
            fields = line.split('\t')
            if len(fields) != len(self.columns):
                raise ParseError('expected {} columns, found {}'.format(
                    len(self.columns), len(fields)), self.relpath, lineno)
            row = {}
            for name, raw in zip(self.columns, fields):
                try:
                    if name in self.lists:
                        row[name] = _split_list(raw)
                    else:
                        row[name] = _unescape(raw)
                except ValueError as err:
                    raise ParseError(str(err), self.relpath, lineno)
            yield lineno, row

    def parse_error(self, msg, line):
        return ParseError(msg, self.relpath, line)

    def integrity_error(self, msg, line=None):
        return IntegrityError(msg, self.relpath, line)


def _identifier(table, line, value, column):
    if not validate_identifier(value):
        raise table.parse_error(
            'invalid identifier {!r} in column {}'.format(value, column), line)
    return value


def _optional(value):
    return value if value != '' else None


def _subdirs(path):
    if not os.path.isdir(path):
        return []
    return sorted(d for d in os.listdir(path)
                  if os.path.isdir(os.path.join(path, d)))


def _tsv_files(path):
    if not os.path.isdir(path):
        return []
    return sorted(f for f in os.listdir(path)
                  if f.endswith('.tsv') and os.path.isfile(os.path.join(path, f)))


def _load_approach(root, aid, seen_ids):
    base = os.path.join('approaches', aid)
    meta = _Table(root, os.path.join(base, 'approach.meta'), META_COLUMNS)
    rows = list(meta.rows())
    fixed = [r['key'] for _, r in rows[:3]]
    if fixed != ['id', 'name', 'version_label']:
        raise meta.parse_error('expected id, name and version_label rows',
            rows[0][0] if rows else 1)
    if rows[0][1]['value'] != aid:
        raise meta.integrity_error('approach id {!r} does not match its '
            'directory {!r}'.format(rows[0][1]['value'], aid), rows[0][0])
    attributes = []
    for line, row in rows[3:]:
        if row['key'] in [n for n, _ in attributes]:
            raise meta.integrity_error(
                'duplicate attribute {!r}'.format(row['key']), line)
        attributes.append((row['key'], row['value']))
    approach = QualityApproach(aid, rows[1][1]['value'],
                               rows[2][1]['value'], tuple(attributes))

    table = _Table(root, os.path.join(base, 'kinds.tsv'), KIND_COLUMNS)
    kinds = {}
    for line, row in table.rows():
        target = _optional(row['default_process_target'])
        if target is not None and target not in PROCESS_TARGETS:
            raise table.parse_error(
                'unknown process target {!r}'.format(target), line)
        if row['kind_name'] in kinds:
            raise table.integrity_error(
                'duplicate kind {!r}'.format(row['kind_name']), line)
        kinds[row['kind_name']] = ElementKind(aid, row['kind_name'], target)

    table = _Table(root, os.path.join(base, 'instances.tsv'), INSTANCE_COLUMNS)
    instances, where = [], {}
    for line, row in table.rows():
        qa_id = _identifier(table, line, row['id'], 'id')
        try:
            conformance = ConformanceLevel(row['conformance'])
        except ValueError:
            raise table.parse_error('unknown conformance {!r}'.format(
                row['conformance']), line)
        order = _optional(row['order'])
        if order is not None:
            if not (order.isascii() and order.isdigit()):
                raise table.parse_error(
                    'order {!r} is not a non-negative integer'.format(order),
                    line)
            order = int(order)
        if qa_id in seen_ids:
            raise table.integrity_error(
                'duplicate instance id {!r}'.format(qa_id), line)
        if row['kind_name'] not in kinds:
            raise table.integrity_error(
                'instance {!r} uses undeclared kind {!r}'.format(
                    qa_id, row['kind_name']), line)
        seen_ids.add(qa_id)
        where[qa_id] = line
        instances.append(QAInstance(qa_id, aid, row['kind_name'], conformance,
            row['text'], _optional(row['parent_id']), order))

    local = {i.id for i in instances}
    for inst in instances:
        if inst.parent_id is not None and inst.parent_id not in local:
            raise table.integrity_error('parent {!r} of {!r} is not an '
                'instance of {}'.format(inst.parent_id, inst.id, aid),
                where[inst.id])
    cycles = containment_cycles({i.id: i.parent_id for i in instances})
    if cycles:
        first = sorted(cycles)[0]
        raise table.integrity_error(
            'containment cycle through {!r}'.format(first), where[first])

    table = _Table(root, os.path.join(base, 'relations.tsv'), RELATION_COLUMNS)
    relations = []
    for line, row in table.rows():
        if row['relation_type'] not in RELATION_TYPES:
            raise table.parse_error('unknown relation type {!r}'.format(
                row['relation_type']), line)
        if row['from_id'] not in local:
            raise table.integrity_error('relation source {!r} is not an '
                'instance of {}'.format(row['from_id'], aid), line)
        relations.append((line, QARelation(
            row['from_id'], row['to_id'], row['relation_type'])))
    return (ApproachRecord(approach, tuple(kinds.values()), tuple(instances),
                           tuple(r for _, r in relations)),
            table, relations)


def _load_process(root, pid):
    base = os.path.join('processes', pid)
    table = _Table(root, os.path.join(base, 'nodes.tsv'), NODE_COLUMNS,
                   lists=('items',))
    nodes, where = {}, {}
    for line, row in table.rows():
        node_id = _identifier(table, line, row['id'], 'id')
        if row['kind'] not in NODE_KINDS:
            raise table.parse_error(
                'unknown node kind {!r}'.format(row['kind']), line)
        if node_id in nodes:
            raise table.integrity_error(
                'duplicate node id {!r}'.format(node_id), line)
        items = row['items']
        if row['kind'] in ITEM_KINDS:
            items = tuple(items)
        elif items:
            raise table.integrity_error('a {} node carries no items'.format(
                row['kind']), line)
        else:
            items = None
        where[node_id] = line
        nodes[node_id] = ProcessNode(node_id, row['kind'], row['name'],
            row['description'], _optional(row['parent_id']), items)
    for node in nodes.values():
        if node.parent_id is not None and node.parent_id not in nodes:
            raise table.integrity_error('parent {!r} of node {!r} does not '
                'exist'.format(node.parent_id, node.id), where[node.id])
    cycles = containment_cycles({n.id: n.parent_id for n in nodes.values()})
    if cycles:
        first = sorted(cycles)[0]
        raise table.integrity_error(
            'containment cycle through {!r}'.format(first), where[first])

    table = _Table(root, os.path.join(base, 'edges.tsv'), EDGE_COLUMNS)
    edges = []
    for line, row in table.rows():
        if row['relation'] not in EDGE_RELATIONS:
            raise table.parse_error(
                'unknown edge relation {!r}'.format(row['relation']), line)
        for end in ('from_id', 'to_id'):
            if row[end] not in nodes:
                raise table.integrity_error('edge endpoint {!r} does not '
                    'exist'.format(row[end]), line)
        edges.append(ProcessEdge(row['from_id'], row['to_id'],
                                 row['relation'], _optional(row['guard'])))
    return ProcessModel(pid, tuple(nodes.values()), tuple(edges))


def _load_mappings(root, pid):
    table = _Table(root, os.path.join('mappings', pid + '.tsv'),
                   MAPPING_COLUMNS, lists=('qa_ids', 'node_ids'))
    mappings, ids = [], set()
    for line, row in table.rows():
        map_id = _identifier(table, line, row['id'], 'id')
        if map_id in ids:
            raise table.integrity_error(
                'duplicate mapping id {!r}'.format(map_id), line)
        if not row['qa_ids'] or not row['node_ids']:
            raise table.integrity_error(
                'mapping {!r} has an empty side'.format(map_id), line)
        ids.add(map_id)
        mappings.append(Mapping(map_id, row['qa_ids'], row['node_ids'],
            _optional(row['primary_source']), row['note']))
    return table, tuple(mappings)


def _load_exclusions(root, aid, record):
    table = _Table(root, os.path.join('exclusions', aid + '.tsv'),
                   EXCLUSION_COLUMNS)
    local = {i.id for i in record.instances}
    exclusions = {}
    for line, row in table.rows():
        if row['qa_id'] not in local:
            raise table.integrity_error('excluded instance {!r} is not an '
                'instance of {}'.format(row['qa_id'], aid), line)
        if row['qa_id'] in exclusions:
            raise table.integrity_error('instance {!r} is excluded '
                'twice'.format(row['qa_id']), line)
        exclusions[row['qa_id']] = Exclusion(row['qa_id'], row['rationale'])
    return tuple(exclusions.values())


def _load_decisions(root):
    if not os.path.isfile(os.path.join(root, 'decisions.log')):
        return ()
    table = _Table(root, 'decisions.log', DECISION_COLUMNS)
    decisions, previous = [], None
    for line, row in table.rows():
        try:
            stamp = isoparse(row['timestamp'])
        except ValueError:
            raise table.parse_error('bad timestamp {!r}'.format(
                row['timestamp']), line)
        if previous is not None and stamp < previous:
            raise table.integrity_error(
                'decision timestamps go backwards', line)
        previous = stamp
        decisions.append(Decision(**row))
    return tuple(decisions)


def load_workspace(path):
    '''
    Reads a workspace directory.

    Args:
        path (str): The workspace directory.

    Returns:
        :obj:`pbu.model.Workspace`

    Raises:
        ParseError:
            A bad header, a wrong column count, a bad escape or an unknown
            value.  The error names the file and the line.
        IntegrityError:
            A dangling reference, a duplicate identifier or a containment
            cycle.
        IoError: The directory cannot be read.

    Examples:
        >>> ws = load_workspace('peer-review')
        >>> [a.id for a in ws.approaches]
        ['cmmi-dev', 'ieee-1028', 'process-impact']
    '''
    if not os.path.isdir(path):
        raise IoError('{} is not a directory'.format(path))
    log.debug('loading workspace %s', path)
    meta = dict((r['key'], r['value']) for _, r in
        _Table(path, 'workspace.meta', META_COLUMNS).rows())
    if meta.get('format_version') != FORMAT_VERSION:
        raise ParseError('unsupported format_version {!r}'.format(
            meta.get('format_version')), 'workspace.meta')

    seen_ids, approaches, relation_tables = set(), [], []
    for aid in _subdirs(os.path.join(path, 'approaches')):
        record, table, relations = _load_approach(path, aid, seen_ids)
        approaches.append(record)
        relation_tables.append((table, relations))
    for table, relations in relation_tables:
        for line, rel in relations:
            if rel.to_id not in seen_ids:
                raise table.integrity_error('relation target {!r} does not '
                    'exist'.format(rel.to_id), line)
    part_of = [(r.from_id, r.to_id) for a in approaches for r in a.relations
               if r.relation_type == 'part-of']
    if graph_has_cycle(part_of):
        raise IntegrityError('part-of relations form a cycle', 'relations.tsv')

    processes = [_load_process(path, pid)
                 for pid in _subdirs(os.path.join(path, 'processes'))]
    process_ids = {p.process_id for p in processes}

    mappings = {}
    for name in _tsv_files(os.path.join(path, 'mappings')):
        pid = name[:-4]
        table, loaded = _load_mappings(path, pid)
        if pid not in process_ids:
            raise table.integrity_error(
                'mappings for unknown process {!r}'.format(pid))
        mappings[pid] = loaded

    records = {a.id: a for a in approaches}
    exclusions = {}
    for name in _tsv_files(os.path.join(path, 'exclusions')):
        aid = name[:-4]
        if aid not in records:
            raise IntegrityError('exclusions for unknown approach {!r}'.format(
                aid), os.path.join('exclusions', name))
        exclusions[aid] = _load_exclusions(path, aid, records[aid])

    return Workspace(tuple(approaches), tuple(processes), mappings,
                     exclusions, _load_decisions(path))


def _render(columns, rows):
    lines = ['\t'.join(columns)]
    for row in rows:
        lines.append('\t'.join(row))
    return '\n'.join(lines) + '\n'


def _write_atomic(path, content):
    directory = os.path.dirname(path)
    os.makedirs(directory, exist_ok=True)
    handle, tmp = tempfile.mkstemp(dir=directory, prefix='.tmp-')
    try:
        with os.fdopen(handle, 'w', encoding='utf-8', newline='') as fobj:
            fobj.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _safe_component(value, what):
    if not validate_identifier(value) or value in ('.', '..') or any(
            sep in value for sep in ('/', '\\', os.sep)):
        raise UnexpectedValueError(
            '{} id {!r} cannot be used as a directory name'.format(what, value))
    return value


def _e(value):
    return escape_field('' if value is None else str(value))


def _approach_files(record):
    a = record.approach
    meta = [('id', a.id), ('name', a.name), ('version_label', a.version_label)]
    meta.extend(a.attributes)
    yield 'approach.meta', _render(META_COLUMNS,
        [(_e(k), _e(v)) for k, v in meta])
    yield 'kinds.tsv', _render(KIND_COLUMNS,
        [(_e(k.kind_name), _e(k.default_process_target))
         for k in record.kinds])
    yield 'instances.tsv', _render(INSTANCE_COLUMNS,
        [(_e(i.id), _e(i.kind_name), i.conformance.value, _e(i.parent_id),
          _e(i.order), _e(i.text)) for i in record.instances])
    yield 'relations.tsv', _render(RELATION_COLUMNS,
        [(_e(r.from_id), _e(r.to_id), r.relation_type)
         for r in record.relations])


def _process_files(process):
    yield 'nodes.tsv', _render(NODE_COLUMNS,
        [(_e(n.id), n.kind, _e(n.parent_id), _e(n.name), _e(n.description),
          join_list(n.items or ())) for n in process.nodes])
    yield 'edges.tsv', _render(EDGE_COLUMNS,
        [(_e(e.from_id), _e(e.to_id), e.relation, _e(e.guard))
         for e in process.edges])


def _sync_ledger(path, decisions):
    ledger = os.path.join(path, 'decisions.log')
    rows = [tuple(_e(getattr(d, c)) for c in DECISION_COLUMNS)
            for d in decisions]
    if not os.path.isfile(ledger):
        _write_atomic(ledger, _render(DECISION_COLUMNS, rows))
        return len(rows)
    existing = _load_decisions(path)
    if tuple(decisions[:len(existing)]) != existing:
        raise IntegrityError('the decision ledger on disk is not a prefix of '
                             'the workspace being saved', 'decisions.log')
    pending = rows[len(existing):]
    if pending:
        with open(ledger, 'a', encoding='utf-8', newline='') as fobj:
            fobj.write(''.join('\t'.join(r) + '\n' for r in pending))
    return len(pending)


def save_workspace(ws, path):
    '''
    Writes a workspace directory.  Every file is written to a temporary file
    and renamed into place; records are sorted by id so the output is byte
    deterministic.  The decision ledger is only ever appended to.

    Args:
        ws (Workspace): The workspace to write.
        path (str): The target directory.  It is created when missing.

    Returns:
        :obj:`None`

    Raises:
        IoError: The directory or one of its files cannot be written.

    Examples:
        >>> save_workspace(ws, 'peer-review-copy')
    '''
    for record in ws.approaches:
        _safe_component(record.id, 'approach')
    for process in ws.processes:
        _safe_component(process.process_id, 'process')
    try:
        os.makedirs(path, exist_ok=True)
        _write_atomic(os.path.join(path, 'workspace.meta'),
            _render(META_COLUMNS, [('format_version', FORMAT_VERSION)]))
        written = 1
        for record in ws.approaches:
            for name, content in _approach_files(record):
                _write_atomic(os.path.join(
                    path, 'approaches', record.id, name), content)
                written += 1
        for process in ws.processes:
            for name, content in _process_files(process):
                _write_atomic(os.path.join(
                    path, 'processes', process.process_id, name), content)
                written += 1
        keep = set()
        for pid, mappings in ws.mappings.items():
            keep.add(os.path.join('mappings', pid + '.tsv'))
            _write_atomic(os.path.join(path, 'mappings', pid + '.tsv'),
                _render(MAPPING_COLUMNS, [(
                    _e(m.id), join_list(sorted(m.qa_ids)),
                    join_list(sorted(m.node_ids)), _e(m.primary_source),
                    _e(m.note)) for m in mappings]))
        for aid, exclusions in ws.exclusions.items():
            keep.add(os.path.join('exclusions', aid + '.tsv'))
            _write_atomic(os.path.join(path, 'exclusions', aid + '.tsv'),
                _render(EXCLUSION_COLUMNS,
                    [(_e(e.qa_id), _e(e.rationale)) for e in exclusions]))
        for sub in ('mappings', 'exclusions'):
            os.makedirs(os.path.join(path, sub), exist_ok=True)
            for name in _tsv_files(os.path.join(path, sub)):
                if os.path.join(sub, name) not in keep:
                    os.unlink(os.path.join(path, sub, name))
        written += len(keep)
        appended = _sync_ledger(path, ws.decisions)
    except OSError as err:
        raise IoError('cannot write workspace {}: {}'.format(path, err))
    log.debug('saved workspace %s: %d files, %d new decisions',
              path, written, appended)


class WorkspaceLock(object):
    '''
    Advisory single-writer lock, held as an exclusively created ``.lock``
    file inside the workspace directory.

    Examples:
        >>> with WorkspaceLock('peer-review'):
        ...     save_workspace(ws, 'peer-review')
    '''
    def __init__(self, path):
        self.lockfile = os.path.join(path, LOCK_NAME)
        self._held = False

    def acquire(self):
        try:
            handle = os.open(self.lockfile,
                             os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise WorkspaceLocked(self.lockfile)
        except OSError as err:
            raise IoError('cannot create lock {}: {}'.format(
                self.lockfile, err))
        with os.fdopen(handle, 'w') as fobj:
            fobj.write('{}\n'.format(os.getpid()))
        self._held = True

    def release(self):
        if self._held:
            self._held = False
            try:
                os.unlink(self.lockfile)
            except FileNotFoundError:
                pass

    def __enter__(self):
        self.acquire()
        return self

    def __exit__(self, *exc):
        self.release()


def append_decision(ws_path, actor, context, decision, rationale):
    '''
    Appends one record to the decision ledger of a workspace.  The timestamp
    is the current UTC time, never earlier than the last record already in the
    ledger.

    Args:
        ws_path (str): The workspace directory.
        actor (str): Who took the decision.
        context (str): Where it applies, e.g. ``map/peer-review``.
        decision (str): What was decided.
        rationale (str): Why.

    Returns:
        :obj:`pbu.model.Decision`: The record that was appended.

    Raises:
        IoError: The workspace does not exist or cannot be written.

    Examples:
        >>> append_decision('peer-review', 'zdk', 'map/peer-review',
        ...     "used PI term 'moderator'", 'clearest of the three synonyms')
    '''
    if not os.path.isfile(os.path.join(ws_path, 'workspace.meta')):
        raise IoError('{} is not a workspace'.format(ws_path))
    with WorkspaceLock(ws_path):
        existing = _load_decisions(ws_path)
        stamp = utc_timestamp()
        if existing and isoparse(existing[-1].timestamp) > isoparse(stamp):
            stamp = existing[-1].timestamp
        record = Decision(stamp, actor, context, decision, rationale)
        try:
            _sync_ledger(ws_path, existing + (record,))
        except OSError as err:
            raise IoError('cannot append to decision ledger: {}'.format(err))
    log.debug('appended decision %s by %s', context, actor)
    return record
