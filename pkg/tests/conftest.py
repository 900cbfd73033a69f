import pytest, os, shutil, tempfile
from pbu.fixtures import build_peer_review
from pbu.unifier import ProcessUnifier
from pbu.workspace import save_workspace

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                           'test_files')


@pytest.fixture(scope='session')
def peer_review():
    return build_peer_review()


@pytest.fixture
def pbu(monkeypatch, peer_review):
    monkeypatch.delenv('PBU_WORKSPACE', raising=False)
    monkeypatch.delenv('PBU_ACTOR', raising=False)
    return ProcessUnifier(workspace=peer_review, actor='pytest')


@pytest.fixture
def tmpdir_path(request):
    path = tempfile.mkdtemp(prefix='pbu-test-')
    def teardown():
        shutil.rmtree(path, ignore_errors=True)
    request.addfinalizer(teardown)
    return path


@pytest.fixture
def wsdir(tmpdir_path, peer_review):
    path = os.path.join(tmpdir_path, 'peer-review')
    save_workspace(peer_review, path)
    return path


@pytest.fixture
def diskpbu(monkeypatch, wsdir):
    monkeypatch.delenv('PBU_WORKSPACE', raising=False)
    return ProcessUnifier(wsdir, actor='pytest')
