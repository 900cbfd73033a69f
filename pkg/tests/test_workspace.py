from pbu.errors import *
from pbu.model import (
    ApproachRecord, ConformanceLevel, Decision, ElementKind, ProcessModel,
    ProcessNode, QAInstance, QualityApproach, Workspace)
from pbu.workspace import *
from pbu.workspace import join_list, split_list
from .checker import check
from .generators import random_workspace
import os, pytest, random


def _snapshot(path):
    files = {}
    for root, _, names in os.walk(path):
        for name in names:
            full = os.path.join(root, name)
            with open(full, 'rb') as fobj:
                files[os.path.relpath(full, path)] = fobj.read()
    return files


def _rewrite(path, relpath, old, new):
    full = os.path.join(path, relpath)
    with open(full, encoding='utf-8') as fobj:
        text = fobj.read()
    assert old in text
    with open(full, 'w', encoding='utf-8', newline='') as fobj:
        fobj.write(text.replace(old, new, 1))


@pytest.mark.parametrize('raw', [
    'plain', 'a\\b', 'tab\there', 'new\nline', 'cr\rhere', '', '\\t literal',
])
def test_workspace_escape_field_inverse(raw):
    escaped = escape_field(raw)
    assert '\t' not in escaped and '\n' not in escaped
    assert unescape_field(escaped) == raw


@pytest.mark.parametrize('raw', ['dangling\\', 'bad \\x escape', 'semi\\;'])
def test_workspace_unescape_field_malformedescape(raw):
    with pytest.raises(MalformedEscape):
        unescape_field(raw)


def test_workspace_list_columns():
    assert join_list(['a;b', 'c']) == 'a\\;b;c'
    assert split_list('a\\;b;c') == ['a;b', 'c']
    assert split_list('') == []
    assert split_list(join_list(['x\ty', '', 'z'])) == ['x\ty', '', 'z']


@pytest.mark.parametrize('items, raw', [
    ((), ''),
    (('',), '\\e'),
    (('', ''), '\\e;\\e'),
    (('\\e',), '\\\\e'),
])
def test_workspace_list_columns_empty_items(items, raw):
    assert join_list(items) == raw
    assert tuple(split_list(raw)) == items


def test_workspace_single_empty_item_round_trip(tmpdir_path):
    ws = Workspace(processes=(ProcessModel('p', (
        ProcessNode('p', 'process', 'Review'),
        ProcessNode('r', 'role', 'Reader', parent_id='p', items=('',)),
        ProcessNode('d', 'data-object', 'Log', parent_id='p', items=()),
    ), ()),))
    path = os.path.join(tmpdir_path, 'ws')
    save_workspace(ws, path)
    back = load_workspace(path)
    assert back.process('p').node('r').items == ('',)
    assert back.process('p').node('d').items == ()
    assert back == ws


def test_workspace_fixture_round_trip(wsdir, peer_review):
    assert load_workspace(wsdir) == peer_review


def test_workspace_double_save_is_byte_identical(wsdir, peer_review):
    before = _snapshot(wsdir)
    save_workspace(peer_review, wsdir)
    assert _snapshot(wsdir) == before


@pytest.mark.parametrize('seed', range(100))
def test_workspace_random_round_trip(tmpdir_path, seed):
    ws = random_workspace(random.Random(seed))
    path = os.path.join(tmpdir_path, 'ws')
    save_workspace(ws, path)
    assert load_workspace(path) == ws
    before = _snapshot(path)
    save_workspace(load_workspace(path), path)
    assert _snapshot(path) == before


def test_workspace_empty_approach(tmpdir_path):
    path = os.path.join(tmpdir_path, 'ws')
    save_workspace(Workspace((ApproachRecord(QualityApproach('a', 'A')),)),
                   path)
    with open(os.path.join(path, 'approaches', 'a', 'instances.tsv')) as fobj:
        assert fobj.read() == 'id\tkind_name\tconformance\tparent_id\torder\ttext\n'
    assert os.path.isfile(os.path.join(path, 'approaches', 'a',
                                       'approach.meta'))
    assert load_workspace(path).approach('a').instances == ()


def test_workspace_bad_header_parseerror(wsdir):
    relpath = os.path.join('approaches', 'ieee-1028', 'instances.tsv')
    _rewrite(wsdir, relpath, 'id\tkind_name', 'ident\tkind_name')
    with pytest.raises(ParseError) as err:
        load_workspace(wsdir)
    assert err.value.filename == relpath
    assert err.value.line == 1


def test_workspace_column_count_parseerror(wsdir):
    relpath = os.path.join('approaches', 'cmmi-dev', 'relations.tsv')
    with open(os.path.join(wsdir, relpath), 'a', encoding='utf-8') as fobj:
        fobj.write('VER SG2\tVER SP2.1\n')
    with pytest.raises(ParseError) as err:
        load_workspace(wsdir)
    assert err.value.filename == relpath


def test_workspace_unknown_conformance_parseerror(wsdir):
    _rewrite(wsdir, os.path.join('approaches', 'cmmi-dev', 'instances.tsv'),
             '\tmandatory\t', '\tmust\t')
    with pytest.raises(ParseError):
        load_workspace(wsdir)


@pytest.mark.parametrize('order', ['²', '٣', '-1', '1.5'])
def test_workspace_bad_order_parseerror(tmpdir_path, order):
    path = os.path.join(tmpdir_path, 'ws')
    save_workspace(Workspace((ApproachRecord(QualityApproach('a', 'A'),
        (ElementKind('a', 'task'),),
        (QAInstance('a1', 'a', 'task', ConformanceLevel.MANDATORY, 'x',
                    order=3),)),)), path)
    relpath = os.path.join('approaches', 'a', 'instances.tsv')
    _rewrite(path, relpath, '\t\t3\tx', '\t\t{}\tx'.format(order))
    with pytest.raises(ParseError) as err:
        load_workspace(path)
    assert err.value.filename == relpath
    assert err.value.line == 2


def test_workspace_format_version_parseerror(wsdir):
    _rewrite(wsdir, 'workspace.meta', 'format_version\t1', 'format_version\t2')
    with pytest.raises(ParseError):
        load_workspace(wsdir)


def test_workspace_dangling_node_parent_integrityerror(wsdir):
    _rewrite(wsdir, os.path.join('processes', 'peer-review', 'nodes.tsv'),
             'assign-roles\tactivity\toverview-procedures',
             'assign-roles\tactivity\tno-such-scope')
    with pytest.raises(IntegrityError):
        load_workspace(wsdir)


def test_workspace_exclusion_of_unknown_instance_integrityerror(wsdir):
    with open(os.path.join(wsdir, 'exclusions', 'process-impact.tsv'), 'a',
              encoding='utf-8') as fobj:
        fobj.write('VER SG2\tnot an instance of process-impact\n')
    with pytest.raises(IntegrityError):
        load_workspace(wsdir)


def test_workspace_missing_directory_ioerror(tmpdir_path):
    with pytest.raises(IoError):
        load_workspace(os.path.join(tmpdir_path, 'nope'))


def test_workspace_save_over_file_ioerror(tmpdir_path, peer_review):
    path = os.path.join(tmpdir_path, 'file')
    with open(path, 'w') as fobj:
        fobj.write('not a directory')
    with pytest.raises(IoError):
        save_workspace(peer_review, path)


def test_workspace_ledger_must_be_prefix(wsdir, peer_review):
    rewritten = Workspace(peer_review.approaches, peer_review.processes,
        peer_review.mappings, peer_review.exclusions,
        (Decision('2013-01-01T00:00:00Z', 'x', 'ctx', 'other', 'history'),))
    with pytest.raises(IntegrityError):
        save_workspace(rewritten, wsdir)


def test_workspace_lock(wsdir):
    with WorkspaceLock(wsdir):
        with pytest.raises(WorkspaceLocked):
            WorkspaceLock(wsdir).acquire()
    assert not os.path.exists(os.path.join(wsdir, '.lock'))


def test_workspace_append_decision(wsdir, peer_review):
    record = append_decision(wsdir, 'zdk', 'map/peer-review',
        "used PI term 'moderator'", 'clearest of the three synonyms')
    check(record, 'timestamp', 'timestamp')
    check(record, 'actor', str)
    decisions = load_workspace(wsdir).decisions
    assert decisions[:-1] == peer_review.decisions
    assert decisions[-1] == record


def test_workspace_append_decision_not_a_workspace_ioerror(tmpdir_path):
    with pytest.raises(IoError):
        append_decision(tmpdir_path, 'a', 'c', 'd', 'r')
