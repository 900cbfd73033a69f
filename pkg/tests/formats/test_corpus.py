from pbu.errors import *
from pbu.formats.corpus import CorpusReader, read_area_names, read_lines
import os, pytest


def _write(path, name, data):
    full = os.path.join(path, name)
    with open(full, 'wb') as fobj:
        fobj.write(data)
    return full


def test_corpus_read_lines(tmpdir_path):
    path = _write(tmpdir_path, 'words.txt', b'  the \n\nof\r\nand\n   \n')
    assert read_lines(path) == ['the', 'of', 'and']


def test_corpus_read_area_names_mixed(tmpdir_path):
    path = _write(tmpdir_path, 'areas.txt',
                  b'VER\tVerification\nValidation\n\nPP\t Project Planning \n')
    assert read_area_names(path) == [('VER', 'Verification'), 'Validation',
                                     ('PP', 'Project Planning')]


def test_corpus_read_lines_ioerror(tmpdir_path):
    with pytest.raises(IoError):
        read_lines(os.path.join(tmpdir_path, 'missing.txt'))


def test_corpus_read_lines_not_utf8(tmpdir_path):
    path = _write(tmpdir_path, 'latin.txt', 'défaut\n'.encode('latin-1'))
    with pytest.raises(ParseError) as err:
        read_lines(path)
    assert err.value.filename == path


def test_corpus_reader_documents(tmpdir_path):
    _write(tmpdir_path, 'VER.txt', b'Verification text.')
    _write(tmpdir_path, 'CM.txt', b'Configuration text.')
    _write(tmpdir_path, 'README', b'ignored')
    reader = CorpusReader(tmpdir_path)
    assert [(d.area_id, d.text) for d in reader] == [
        ('CM', 'Configuration text.'), ('VER', 'Verification text.')]
    assert reader.text() == 'Configuration text.\nVerification text.'


def test_corpus_reader_empty_directory(tmpdir_path):
    assert CorpusReader(tmpdir_path).documents() == []
    assert CorpusReader(tmpdir_path).text() == ''


def test_corpus_reader_missing_directory(tmpdir_path):
    with pytest.raises(IoError):
        CorpusReader(os.path.join(tmpdir_path, 'nope'))
