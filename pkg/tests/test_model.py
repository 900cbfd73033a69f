from fractions import Fraction
from pbu.errors import *
from pbu.model import *
from pbu.utils import fresh_id, ratio, render_ratio
import pytest


@pytest.mark.parametrize('raw, level', [
    ('shall', ConformanceLevel.MANDATORY),
    ('SHOULD', ConformanceLevel.RECOMMENDATION),
    ('May', ConformanceLevel.OPTIONAL),
    ('', ConformanceLevel.UNSPECIFIED),
    ('mandatory', ConformanceLevel.MANDATORY),
    (ConformanceLevel.OPTIONAL, ConformanceLevel.OPTIONAL),
])
def test_normalize_conformance(raw, level):
    assert normalize_conformance(raw) == level


def test_normalize_conformance_is_idempotent():
    for level in ConformanceLevel:
        assert normalize_conformance(normalize_conformance(level.value)) == level


def test_normalize_conformance_unknownconformance():
    with pytest.raises(UnknownConformance):
        normalize_conformance('must')


def test_conformance_severity_order():
    order = list(ConformanceLevel)
    assert [l.severity for l in order] == sorted(
        [l.severity for l in order], reverse=True)
    assert ConformanceLevel.MANDATORY.at_least(ConformanceLevel.RECOMMENDATION)
    assert ConformanceLevel.OPTIONAL.at_least(ConformanceLevel.OPTIONAL)
    assert not ConformanceLevel.OPTIONAL.at_least(ConformanceLevel.MANDATORY)


@pytest.mark.parametrize('raw, valid', [
    ('VER SP2.1 SUBP1', True),
    ('IEEE 1028 In should a', True),
    ('pi11', True),
    ('', False),
    (' leading', False),
    ('trailing ', False),
    ('a\tb', False),
    ('a\nb', False),
    (None, False),
])
def test_validate_identifier(raw, valid):
    assert validate_identifier(raw) == valid


def test_process_node_items_normalised():
    assert ProcessNode('r', 'role').items == ()
    assert ProcessNode('a', 'activity', items=()).items is None
    assert ProcessNode('d', 'data-object', items=['x', 'y']).items == ('x', 'y')


def test_mapping_sides_are_sets():
    mapping = Mapping('m-0001', ['a', 'b', 'a'], ('n',))
    assert mapping.qa_ids == frozenset({'a', 'b'})
    assert mapping.node_ids == frozenset({'n'})


def test_workspace_equality_ignores_construction_order():
    a = ApproachRecord(QualityApproach('a', 'A'))
    b = ApproachRecord(QualityApproach('b', 'B'))
    m1, m2 = Mapping('m-0001', {'x'}, {'n'}), Mapping('m-0002', {'y'}, {'n'})
    assert (Workspace((a, b), mappings={'p': (m1, m2)})
            == Workspace((b, a), mappings={'p': (m2, m1)}))


def test_workspace_drops_empty_collections():
    ws = Workspace(mappings={'p': ()}, exclusions={'a': ()})
    assert ws.mappings == {}
    assert ws.exclusions == {}


def test_process_model_root():
    proc = ProcessModel('p', (ProcessNode('p', 'process'),
                              ProcessNode('a', 'activity', parent_id='p')))
    assert proc.root.id == 'p'
    assert [n.id for n in proc.children('p')] == ['a']
    assert ProcessModel('q', (ProcessNode('x', 'process'),
                              ProcessNode('y', 'process'))).root is None


def test_verification_report_orders_errors_first():
    report = VerificationReport((
        Finding('warning', 'DuplicateMapping', ('m-0002',), ''),
        Finding('error', 'DanglingTarget', ('n',), ''),
        Finding('error', 'BadPrimary', ('m-0001',), ''),
    ))
    assert report.codes() == ['BadPrimary', 'DanglingTarget',
                              'DuplicateMapping']
    assert len(report.errors) == 2
    assert len(report.warnings) == 1


def test_containment_cycles():
    assert containment_cycles({'a': 'b', 'b': 'a', 'c': 'a', 'd': None}) == {
        'a', 'b'}
    assert containment_cycles({'a': None, 'b': 'a'}) == set()
    assert containment_cycles({'s': 's'}) == {'s'}


def test_graph_has_cycle():
    assert graph_has_cycle([('a', 'b'), ('b', 'c'), ('c', 'a')])
    assert not graph_has_cycle([('a', 'b'), ('a', 'c'), ('b', 'c')])


@pytest.mark.parametrize('value, places, rendered', [
    (Fraction(1, 8), 2, '0.13'),
    (Fraction(1, 3), 4, '0.3333'),
    (Fraction(2, 3), 4, '0.6667'),
    (Fraction(1, 1), 4, '1.0000'),
    (Fraction(1, 2), 3, '0.500'),
    (Fraction(5, 100000), 4, '0.0001'),
])
def test_render_ratio_half_up(value, places, rendered):
    assert render_ratio(value, places) == rendered


def test_ratio_zero_denominator():
    assert ratio(0, 0) == 0
    assert ratio(3, 4) == Fraction(3, 4)


def test_fresh_id():
    assert fresh_id({'x'}, 'a') == 'a'
    assert fresh_id({'a', 'a-2'}, 'a') == 'a-3'
