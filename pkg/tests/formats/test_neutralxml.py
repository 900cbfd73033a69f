from pbu.errors import *
import io, os, pytest

pytest.importorskip('defusedxml')

from pbu.formats.neutralxml import NeutralXMLReader

DOCUMENT = r'''<?xml version="1.0" encoding="UTF-8"?>
<process id="p">
  <node id="p" kind="process" name="P" description="" />
  <node id="a" kind="activity" parent_id="p" name="A" description="d" />
  <node id="r" kind="role" parent_id="p" name="R" description=""
        items="Plan\; lead;Decide" />
  <edge from="r" to="a" relation="performs" />
</process>
'''


def _check_process(process):
    assert process.process_id == 'p'
    assert [n.id for n in process.nodes] == ['a', 'p', 'r']
    assert process.node('r').items == ('Plan; lead', 'Decide')
    assert process.node('a').items is None
    assert process.node('a').parent_id == 'p'
    assert process.edges[0].relation == 'performs'
    assert process.edges[0].guard is None


def test_neutralxml_from_string():
    _check_process(NeutralXMLReader(DOCUMENT).process())


def test_neutralxml_from_file_object():
    _check_process(NeutralXMLReader(io.BytesIO(DOCUMENT.encode('utf-8'))
                                    ).process())


def test_neutralxml_from_path(tmpdir_path):
    path = os.path.join(tmpdir_path, 'p.xml')
    with open(path, 'w', encoding='utf-8') as fobj:
        fobj.write(DOCUMENT)
    _check_process(NeutralXMLReader(path).process())


def test_neutralxml_missing_file_ioerror(tmpdir_path):
    with pytest.raises(IoError):
        NeutralXMLReader(os.path.join(tmpdir_path, 'nope.xml'))


def test_neutralxml_malformed_names_file(tmpdir_path):
    path = os.path.join(tmpdir_path, 'broken.xml')
    with open(path, 'w', encoding='utf-8') as fobj:
        fobj.write('<process id="p"><node ')
    with pytest.raises(ParseError) as err:
        NeutralXMLReader(path)
    assert err.value.filename == path


def test_neutralxml_entities_refused():
    document = ('<?xml version="1.0"?>\n<!DOCTYPE process [\n'
                '<!ENTITY boom "boom">\n]>\n'
                '<process id="&boom;" />')
    with pytest.raises(ParseError):
        NeutralXMLReader(document)


def test_neutralxml_unexpected_element():
    with pytest.raises(ParseError):
        NeutralXMLReader('<process id="p"><lane id="x" /></process>').process()
