from pbu.errors import *
from pbu.unifier import ProcessUnifier
from pbu.workspace import load_workspace
from .checker import check
import json, logging, os, pytest

UNMAPPED = 'IEEE1028-2008 6.5.2 2'


def test_base_check_typeerror(pbu):
    with pytest.raises(TypeError):
        pbu.mappings._check('name', 1, str)


def test_base_check_default(pbu):
    assert pbu.mappings._check('name', None, str, default='x') == 'x'
    assert pbu.mappings._check('name', None, str) is None


def test_base_check_case(pbu):
    assert pbu.mappings._check('level', 'SHALL', str, case='lower') == 'shall'


def test_base_check_choices_unexpectedvalueerror(pbu):
    with pytest.raises(UnexpectedValueError):
        pbu.mappings._check('kind', 'lane', str, choices=['activity', 'role'])


def test_base_check_pattern_unexpectedvalueerror(pbu):
    assert pbu.mappings._check('id', 'm-0001', str, pattern=r'^m-\d+$')
    with pytest.raises(UnexpectedValueError):
        pbu.mappings._check('id', 'x-1', str, pattern=r'^m-\d+$')


@pytest.mark.parametrize('value', ['', 'a\tb', ' lead', ['ok', 'tab\there']])
def test_base_check_identifier_unexpectedvalueerror(pbu, value):
    with pytest.raises(UnexpectedValueError):
        pbu.mappings._check('qa_ids', value, (list, 'identifier'))


def test_base_check_identifier_members(pbu):
    assert pbu.mappings._check('qa_ids', ['VER SP2.1 SUBP1', 'pi11'],
                               (list, 'identifier')) == ['VER SP2.1 SUBP1',
                                                         'pi11']


def test_base_exception_logs_error(caplog):
    with caplog.at_level(logging.ERROR, logger='pbu.errors'):
        err = UnknownSource('instance NO-SUCH does not exist')
    assert str(err) == 'instance NO-SUCH does not exist'
    assert repr(err) == repr('instance NO-SUCH does not exist')
    assert caplog.records[-1].levelname == 'ERROR'
    assert caplog.records[-1].name == 'pbu.errors.UnknownSource'


def test_base_trace_logs_json(pbu, caplog):
    with caplog.at_level(logging.DEBUG, logger='pbu.unifier'):
        pbu.coverage.report('ieee-1028')
    traces = [json.loads(r.getMessage()) for r in caplog.records
              if r.name == 'pbu.unifier.ProcessUnifier']
    assert {'operation': 'coverage.report',
            'params': {'approach_id': 'ieee-1028', 'level': None}} in traces


def test_base_session_in_memory(monkeypatch):
    monkeypatch.delenv('PBU_WORKSPACE', raising=False)
    monkeypatch.delenv('PBU_ACTOR', raising=False)
    session = ProcessUnifier()
    assert session.path is None
    assert session.workspace.approaches == ()
    assert session.save() is None


def test_base_session_path_from_environment(monkeypatch, wsdir):
    monkeypatch.setenv('PBU_WORKSPACE', wsdir)
    session = ProcessUnifier()
    assert session.path == wsdir
    assert [a.id for a in session.workspace.approaches] == [
        'cmmi-dev', 'ieee-1028', 'process-impact']


def test_base_session_argument_wins(monkeypatch, wsdir, tmpdir_path):
    monkeypatch.setenv('PBU_WORKSPACE', tmpdir_path)
    assert ProcessUnifier(wsdir).path == wsdir


@pytest.mark.parametrize('env, argument, expected', [
    (None, None, 'pbu'),
    ('env-actor', None, 'env-actor'),
    ('env-actor', 'zdk', 'zdk'),
])
def test_base_session_actor(monkeypatch, peer_review, env, argument,
                            expected):
    monkeypatch.delenv('PBU_WORKSPACE', raising=False)
    if env:
        monkeypatch.setenv('PBU_ACTOR', env)
    else:
        monkeypatch.delenv('PBU_ACTOR', raising=False)
    session = ProcessUnifier(workspace=peer_review, actor=argument)
    session.coverage.exclude(UNMAPPED, 'general guideline')
    decision = session.workspace.decisions[-1]
    check(decision, 'timestamp', 'timestamp')
    assert decision.actor == expected
    assert decision.context == 'exclude/ieee-1028'
    assert decision.decision == 'excluded {}'.format(UNMAPPED)
    assert decision.timestamp >= peer_review.decisions[-1].timestamp


def test_base_session_in_memory_commit_leaves_value(pbu, peer_review):
    pbu.coverage.exclude(UNMAPPED, 'general guideline')
    assert len(pbu.workspace.decisions) == len(peer_review.decisions) + 1
    assert UNMAPPED not in peer_review.excluded_ids()


def test_base_session_commit_saves(diskpbu, wsdir, peer_review):
    diskpbu.coverage.exclude(UNMAPPED, 'general guideline')
    stored = load_workspace(wsdir)
    assert stored == diskpbu.workspace
    assert UNMAPPED in stored.excluded_ids()
    assert stored.decisions[:-1] == peer_review.decisions
    assert not os.path.exists(os.path.join(wsdir, '.lock'))


def test_base_session_commit_locked(diskpbu, wsdir, peer_review):
    open(os.path.join(wsdir, '.lock'), 'w').close()
    with pytest.raises(WorkspaceLocked):
        diskpbu.coverage.exclude(UNMAPPED, 'general guideline')
    assert diskpbu.workspace == peer_review
    assert load_workspace(wsdir) == peer_review


def test_base_session_reload(diskpbu, wsdir):
    other = ProcessUnifier(wsdir, actor='other')
    other.coverage.exclude(UNMAPPED, 'general guideline')
    assert UNMAPPED not in diskpbu.workspace.excluded_ids()
    assert UNMAPPED in diskpbu.reload().excluded_ids()


def test_base_session_save_elsewhere(pbu, peer_review, tmpdir_path):
    target = os.path.join(tmpdir_path, 'copy')
    assert pbu.save(target) == target
    assert load_workspace(target) == peer_review
