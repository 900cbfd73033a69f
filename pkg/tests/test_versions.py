from dataclasses import replace
from pbu.errors import *
from pbu.model import ConformanceLevel, QAInstance
from pbu.versions import diff_versions
import pytest

TWP = 'typical work product'


def _cmmi(peer_review):
    return peer_review.approach('cmmi-dev')


def _renamed_work_products(record):
    '''
    The CMMI snapshot with its typical work products renamed to work
    products, as a later version of the model does.
    '''
    kinds = tuple(replace(k, kind_name='work product') if k.kind_name == TWP
                  else k for k in record.kinds)
    instances = tuple(replace(i, kind_name='work product')
                      if i.kind_name == TWP else i for i in record.instances)
    return replace(record, approach=replace(record.approach,
        version_label='2.0'), kinds=kinds, instances=instances)


def _without(record, qa_id):
    return replace(record, instances=tuple(i for i in record.instances
                                           if i.id != qa_id))


def _with(record, instance):
    return replace(record, instances=record.instances + (instance,))


def test_versions_diff_identical(pbu):
    diff = pbu.versions.diff('cmmi-dev', 'cmmi-dev')
    assert not diff
    assert diff.added == diff.removed == diff.modified == ()


def test_versions_diff_kind_rename(pbu, peer_review):
    old = _cmmi(peer_review)
    diff = pbu.versions.diff(old, _renamed_work_products(old))
    assert diff.added == ()
    assert diff.removed == ()
    assert len(diff.modified) == 11
    for qa_id, fields in diff.modified:
        assert 'TWP' in qa_id
        assert fields == ('kind_name',)


def test_versions_diff_added_removed(peer_review):
    old = _cmmi(peer_review)
    new = _with(_without(old, 'VER SP2.1 SUBP4'), QAInstance(
        'VER SP2.1 SUBP4a', 'cmmi-dev', 'subpractice', ConformanceLevel.OPTIONAL,
        'Establish criteria for requiring another peer review', 'VER SP2.1', 4))
    diff = diff_versions(old, new)
    assert diff.added == ('VER SP2.1 SUBP4a',)
    assert diff.removed == ('VER SP2.1 SUBP4',)
    assert diff.modified == ()


def test_versions_diff_multiple_fields(peer_review):
    old = _cmmi(peer_review)
    new = replace(old, instances=tuple(
        replace(i, text='Prepare', order=9) if i.id == 'VER SP2.1' else i
        for i in old.instances))
    assert diff_versions(old, new).modified == (
        ('VER SP2.1', ('text', 'order')),)


def test_versions_diff_unknownapproach(pbu):
    with pytest.raises(UnknownApproach):
        pbu.versions.diff('cmmi-dev', 'cmmi-dev-2')


def test_versions_stale_kind_rename_needs_review_only(pbu, peer_review):
    old = _cmmi(peer_review)
    report = pbu.versions.stale('peer-review',
                                diff_versions(old, _renamed_work_products(old)))
    assert report.broken == ()
    assert {qa_id for _, qa_id in report.review} == {
        i.id for i in old.instances if i.kind_name == TWP}
    assert report.review == tuple(sorted(report.review))


def test_versions_stale_removed_instance_is_broken(pbu, peer_review):
    old = _cmmi(peer_review)
    report = pbu.versions.stale('peer-review',
                                diff_versions(old, _without(old, 'VER SP2.1 SUBP4')))
    assert report.broken == (('m-0052', 'VER SP2.1 SUBP4'),)
    assert report.review == ()


def test_versions_stale_unknownprocess(pbu):
    diff = pbu.versions.diff('cmmi-dev', 'cmmi-dev')
    with pytest.raises(UnknownProcess):
        pbu.versions.stale('no-such-process', diff)


def test_versions_adopt_then_rebind(pbu, peer_review):
    old = _cmmi(peer_review)
    new = _with(_without(old, 'VER SP2.1 SUBP4'), QAInstance(
        'VER SP2.1 SUBP4a', 'cmmi-dev', 'subpractice', ConformanceLevel.OPTIONAL,
        'Establish criteria for requiring another peer review', 'VER SP2.1', 4))
    diff = pbu.versions.adopt('cmmi-dev', new)
    assert diff.removed == ('VER SP2.1 SUBP4',)
    assert pbu.workspace.decisions[-1].context == 'adopt/cmmi-dev'
    assert pbu.mappings.verify('peer-review').codes() == ['DanglingSource']

    decisions = len(pbu.workspace.decisions)
    mapping = pbu.versions.rebind('peer-review', 'm-0052', 'VER SP2.1 SUBP4',
                                  'VER SP2.1 SUBP4a')
    assert mapping.qa_ids == frozenset({'VER SP2.1 SUBP4a'})
    assert len(pbu.workspace.decisions) == decisions + 1
    assert len(pbu.mappings.verify('peer-review')) == 0
    assert pbu.mappings.trace_to_process('VER SP2.1 SUBP4a') == {
        'maintain-reinspection-criteria'}


def test_versions_rebind_moves_primary_source(pbu):
    mapping = pbu.versions.rebind('peer-review', 'm-0001', 'VER SG2',
                                  'VER SP2.3')
    assert mapping.primary_source == 'VER SP2.3'
    assert mapping.qa_ids == frozenset({'VER SP2.3', 'PI Overview'})


def test_versions_rebind_unknownmapping(pbu):
    with pytest.raises(UnknownMapping):
        pbu.versions.rebind('peer-review', 'm-9999', 'VER SG2', 'VER SP2.1')


def test_versions_rebind_sourcenotinmapping(pbu):
    with pytest.raises(SourceNotInMapping):
        pbu.versions.rebind('peer-review', 'm-0052', 'VER SG2', 'VER SP2.1')


def test_versions_rebind_unknownsource(pbu):
    with pytest.raises(UnknownSource):
        pbu.versions.rebind('peer-review', 'm-0052', 'VER SP2.1 SUBP4',
                            'VER SP2.1 SUBP99')


def test_versions_adopt_drops_dangling_relations(pbu, peer_review):
    new = _without(_cmmi(peer_review), 'VER SP 2.1 TWP3')
    assert len(new.relations) == 2
    pbu.versions.adopt('cmmi-dev', new)
    assert pbu.workspace.approach('cmmi-dev').relations == ()


def test_versions_adopt_drops_exclusions_of_removed(pbu, peer_review):
    record = peer_review.approach('process-impact')
    pbu.versions.adopt('process-impact', _without(record, 'PI Risk'))
    assert 'PI Risk' not in pbu.workspace.excluded_ids()
    assert 'PI Participants' in pbu.workspace.excluded_ids()


def test_versions_adopt_typeerror(pbu):
    with pytest.raises(TypeError):
        pbu.versions.adopt('cmmi-dev', 'cmmi-dev')


def test_versions_adopt_wrong_approach(pbu, peer_review):
    with pytest.raises(UnexpectedValueError):
        pbu.versions.adopt('cmmi-dev', peer_review.approach('ieee-1028'))


def test_versions_adopt_id_clash(pbu, peer_review):
    clash = _with(_cmmi(peer_review), QAInstance(
        'pi11', 'cmmi-dev', 'subpractice', ConformanceLevel.OPTIONAL,
        'clash', None, None))
    with pytest.raises(UnexpectedValueError):
        pbu.versions.adopt('cmmi-dev', clash)


def test_versions_rebind_retires_exclusion(pbu, peer_review):
    assert 'PI Risk' in peer_review.excluded_ids()
    mapping = pbu.versions.rebind('peer-review', 'm-0032',
                                  'IEEE1028-2008 6.5.3 1', 'PI Risk')
    assert 'PI Risk' in mapping.qa_ids
    assert 'PI Risk' not in pbu.workspace.excluded_ids()
    assert not pbu.mappings.verify('peer-review').findings
    rebound, retired = pbu.workspace.decisions[-2:]
    assert rebound.context == 'rebind/peer-review'
    assert retired.context == 'exclude/process-impact'
    assert retired.decision == 'retired exclusion of PI Risk'
