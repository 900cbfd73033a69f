from dataclasses import replace
from itertools import combinations
from pbu.errors import *
from pbu.mappings import MappingKind, classify_mapping, count_candidate_mappings
from pbu.model import Exclusion, Mapping
from pbu.unifier import ProcessUnifier
from .checker import check
import pytest


def _brute_force(n, m, x):
    first, second = range(n), range(m)
    one_to_x = sum(1 for _ in first for _ in combinations(second, x))
    x_to_one = sum(1 for _ in second for _ in combinations(first, x))
    return one_to_x + x_to_one


def _mapping_of(pbu, qa_id):
    return [m for m in pbu.mappings.list('peer-review') if qa_id in m.qa_ids]


@pytest.mark.parametrize('sources, targets, kind', [
    (1, 1, MappingKind.ELEMENTARY),
    (1, 2, MappingKind.ONE_TO_MANY),
    (2, 1, MappingKind.MANY_TO_ONE),
    (3, 4, MappingKind.MANY_TO_MANY),
])
def test_mappings_classify(sources, targets, kind):
    mapping = Mapping('m-0001', ['q{}'.format(i) for i in range(sources)],
                      ['n{}'.format(i) for i in range(targets)])
    assert classify_mapping(mapping) == kind


def test_mappings_classify_kind_values():
    assert MappingKind.ONE_TO_MANY.value == 'complex_one_to_many'
    assert MappingKind.MANY_TO_MANY.value == 'complex_many_to_many'


def test_mappings_count_candidates_against_brute_force():
    for n in range(7):
        for m in range(7):
            for x in range(4):
                assert count_candidate_mappings(n, m, x) == _brute_force(n, m, x)


def test_mappings_count_candidates_example(pbu):
    assert pbu.mappings.count_candidates(3, 2, 2) == 9


@pytest.mark.parametrize('args', [('3', 2, 1), (3, 2.0, 1), (3, 2, True)])
def test_mappings_count_candidates_typeerror(args):
    with pytest.raises(TypeError):
        count_candidate_mappings(*args)


def test_mappings_count_candidates_unexpectedvalueerror():
    with pytest.raises(UnexpectedValueError):
        count_candidate_mappings(-1, 2, 1)


def test_mappings_count_candidates_overflow():
    with pytest.raises(Overflow):
        count_candidate_mappings(2 ** 40, 2 ** 40, 2)


def test_mappings_list(pbu):
    mappings = pbu.mappings.list('peer-review')
    assert [m.id for m in mappings] == sorted(m.id for m in mappings)
    for mapping in mappings:
        check(mapping, 'id', 'mapping-id')
        check(mapping, 'qa_ids', frozenset)
        check(mapping, 'note', str)


def test_mappings_list_unknownprocess(pbu):
    with pytest.raises(UnknownProcess):
        pbu.mappings.list('no-such-process')


def test_mappings_verify_fixture_is_clean(pbu):
    assert len(pbu.mappings.verify('peer-review')) == 0


def test_mappings_verify_dangling_target_per_node(pbu, peer_review):
    process = peer_review.process('peer-review')
    referenced = sorted({n for m in peer_review.mappings_for('peer-review')
                         for n in m.node_ids})
    for node_id in referenced:
        pruned = replace(process, nodes=tuple(n for n in process.nodes
                                              if n.id != node_id))
        ws = replace(peer_review, processes=(pruned,))
        report = ProcessUnifier(workspace=ws).mappings.verify('peer-review')
        assert report.codes() == ['DanglingTarget']
        assert report.findings[0].subject_ids[0] == node_id


def test_mappings_verify_dangling_source_per_instance(peer_review):
    mapped = peer_review.mapped_ids()
    for record in peer_review.approaches:
        for inst in record.instances:
            if inst.id not in mapped:
                continue
            pruned = replace(record, instances=tuple(
                i for i in record.instances if i.id != inst.id))
            ws = replace(peer_review, approaches=tuple(
                pruned if a.id == record.id else a
                for a in peer_review.approaches))
            report = ProcessUnifier(workspace=ws).mappings.verify(
                'peer-review')
            assert report.codes() == ['DanglingSource']
            assert report.findings[0].subject_ids[0] == inst.id


def test_mappings_verify_duplicate_is_warning(pbu):
    pbu.mappings.add('peer-review', ['IEEE1028-2008 6.5.4'],
                     ['describe-features'])
    report = pbu.mappings.verify('peer-review')
    assert report.codes() == ['DuplicateMapping']
    assert report.errors == ()


def test_mappings_verify_mapped_and_excluded(peer_review):
    ws = replace(peer_review, exclusions=dict(peer_review.exclusions, **{
        'ieee-1028': (Exclusion('IEEE1028-2008 6.5.4', 'both'),)}))
    report = ProcessUnifier(workspace=ws).mappings.verify('peer-review')
    assert report.codes() == ['MappedAndExcluded']


def test_mappings_add(pbu):
    before = pbu.mappings.list('peer-review')
    decisions = len(pbu.workspace.decisions)
    mapping_id = pbu.mappings.add('peer-review', ['IEEE1028-2008 6.5.2 2'],
        ['assemble-materials'], note='reference material on request')
    assert mapping_id == 'm-{:04d}'.format(len(before) + 1)
    assert len(pbu.mappings.list('peer-review')) == len(before) + 1
    assert len(pbu.workspace.decisions) == decisions + 1
    check(pbu.workspace.decisions[-1], 'timestamp', 'timestamp')
    assert pbu.workspace.decisions[-1].actor == 'pytest'
    assert pbu.workspace.decisions[-1].context == 'map/peer-review'


def test_mappings_add_retires_exclusion(pbu):
    decisions = len(pbu.workspace.decisions)
    pbu.mappings.add('peer-review', ['PI Risk'], ['gw-review-type'])
    assert 'PI Risk' not in pbu.workspace.excluded_ids()
    assert len(pbu.workspace.decisions) == decisions + 2
    assert len(pbu.mappings.verify('peer-review')) == 0


def test_mappings_add_unknownsource(pbu):
    with pytest.raises(UnknownSource):
        pbu.mappings.add('peer-review', ['no such instance'], ['rework'])


def test_mappings_add_unknowntarget(pbu):
    with pytest.raises(UnknownTarget):
        pbu.mappings.add('peer-review', ['pi11'], ['no-such-node'])


def test_mappings_add_badprimary(pbu):
    with pytest.raises(BadPrimary):
        pbu.mappings.add('peer-review', ['pi11'], ['rework'],
                         primary_source='pi12')


def test_mappings_add_emptyside(pbu):
    with pytest.raises(EmptySide):
        pbu.mappings.add('peer-review', [], ['rework'])


def test_mappings_add_qa_ids_typeerror(pbu):
    with pytest.raises(TypeError):
        pbu.mappings.add('peer-review', 'pi11', ['rework'])


def test_mappings_remove(pbu):
    mapping = _mapping_of(pbu, 'IEEE1028-2008 6.5.4')[0]
    pbu.mappings.remove('peer-review', mapping.id)
    assert mapping.id not in [m.id for m in pbu.mappings.list('peer-review')]
    assert pbu.mappings.trace_to_process('IEEE1028-2008 6.5.4') == set()


def test_mappings_remove_unknownmapping(pbu):
    with pytest.raises(UnknownMapping):
        pbu.mappings.remove('peer-review', 'm-9999')


def test_mappings_trace_to_process(pbu):
    assert pbu.mappings.trace_to_process('IEEE1028-2008 6.5.3 1') == {
        'assign-roles'}
    assert pbu.mappings.trace_to_process('IEEE1028-2008 6.5.2 2') == set()


def test_mappings_trace_to_process_unknownsource(pbu):
    with pytest.raises(UnknownSource):
        pbu.mappings.trace_to_process('no such instance')


def test_mappings_trace_to_sources(pbu):
    assert pbu.mappings.trace_to_sources('assign-roles') == {
        'cmmi-dev': ['VER GP 2.4', 'VER GP 2.7'],
        'ieee-1028': ['IEEE1028-2008 6.5.3 1'],
    }


def test_mappings_trace_to_sources_unmapped_node(pbu):
    assert pbu.mappings.trace_to_sources('check-entry-criteria') == {}


def test_mappings_trace_to_sources_unknowntarget(pbu):
    with pytest.raises(UnknownTarget):
        pbu.mappings.trace_to_sources('no-such-node')


def test_mappings_trace_round_trip(pbu, peer_review):
    for _, mapping in peer_review.all_mappings():
        for qa_id in mapping.qa_ids:
            for node_id in pbu.mappings.trace_to_process(qa_id):
                sources = pbu.mappings.trace_to_sources(node_id)
                assert any(qa_id in ids for ids in sources.values())


def test_mappings_for_approach(pbu, peer_review):
    ieee = {i.id for i in peer_review.approach('ieee-1028').instances}
    view = pbu.mappings.for_approach('ieee-1028', 'peer-review')
    assert view
    for mapping in view:
        assert mapping.qa_ids <= ieee
        assert mapping.primary_source in mapping.qa_ids | {None}
    expected = [m.id for m in peer_review.mappings_for('peer-review')
                if m.qa_ids & ieee]
    assert [m.id for m in view] == expected


def test_mappings_for_approach_unknownapproach(pbu):
    with pytest.raises(UnknownApproach):
        pbu.mappings.for_approach('iso-9001', 'peer-review')
