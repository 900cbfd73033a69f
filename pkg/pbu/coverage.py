'''
coverage
========

The following methods measure how completely a quality approach has been
absorbed into the unified processes, and produce the per-instance evidence an
appraisal needs.  Every instance is in exactly one state: mapped (referenced
by a mapping of any process), excluded (deliberately left out, with a
rationale) or unaccounted.

Methods available on ``pbu.coverage``:

.. rst-class:: hide-signature
.. autoclass:: CoverageAPI

    .. automethod:: appraise
    .. automethod:: census
    .. automethod:: exclude
    .. automethod:: report

.. autoclass:: CoverageRow
.. autoclass:: CoverageReport
.. autoclass:: AppraisalRow
.. autoclass:: AppraisalReport
.. autoclass:: InstanceCensus
'''
from collections import Counter
from dataclasses import dataclass, replace
from .base import UnifierEndpoint
from .errors import AlreadyMapped, DuplicateExclusion, UnknownSource
from .model import ConformanceLevel, Exclusion, normalize_conformance
from .utils import ratio, render_ratio

MAPPED, EXCLUDED, UNACCOUNTED = 'mapped', 'excluded', 'unaccounted'


@dataclass(frozen=True)
class CoverageRow:
    label: str
    total: int = 0
    mapped: int = 0
    excluded: int = 0
    unaccounted: int = 0

    @property
    def mapped_ratio(self):
        return ratio(self.mapped, self.total)

    @property
    def accounted_ratio(self):
        return ratio(self.mapped + self.excluded, self.total)

    def rendered(self):
        '''
        The row as strings, ratios rendered to four decimals.
        '''
        return (self.label, str(self.total), str(self.mapped),
                str(self.excluded), str(self.unaccounted),
                render_ratio(self.mapped_ratio),
                render_ratio(self.accounted_ratio))


@dataclass(frozen=True)
class CoverageReport:
    '''
    Attributes:
        approach_id (str): The approach the report is about.
        level_filter (ConformanceLevel): The level filter, or ``None``.
        by_level (tuple): One :class:`CoverageRow` per conformance level.
        by_kind (tuple): One :class:`CoverageRow` per element kind.
        total (CoverageRow): The grand total.
    '''
    approach_id: str
    level_filter: ConformanceLevel
    by_level: tuple
    by_kind: tuple
    total: CoverageRow


@dataclass(frozen=True)
class AppraisalRow:
    qa_id: str
    conformance: ConformanceLevel
    status: str
    targets: tuple


@dataclass(frozen=True)
class AppraisalReport:
    approach_id: str
    fail_level: ConformanceLevel
    rows: tuple
    verdict: str

    @property
    def passed(self):
        return self.verdict == 'pass'


@dataclass(frozen=True)
class InstanceCensus:
    approach_id: str
    counts: dict
    total: int

    def __getitem__(self, kind_name):
        return self.counts.get(kind_name, 0)


def _tally(label, statuses):
    counts = Counter(statuses)
    return CoverageRow(label, len(statuses), counts[MAPPED],
                       counts[EXCLUDED], counts[UNACCOUNTED])


class CoverageAPI(UnifierEndpoint):
    def _statuses(self, record):
        ws = self._api.workspace
        mapped = ws.mapped_ids()
        excluded = {e.qa_id for e in ws.exclusions_for(record.id)}
        status = {}
        for inst in record.instances:
            # A mapping always wins over a stale exclusion.
            if inst.id in mapped:
                status[inst.id] = MAPPED
            elif inst.id in excluded:
                status[inst.id] = EXCLUDED
            else:
                status[inst.id] = UNACCOUNTED
        return status

    def report(self, approach_id, level=None):
        '''
        Computes the coverage of an approach.

        Args:
            approach_id (str): The quality approach.
            level (str, optional):
                Restrict the report to one conformance level.  Accepts the
                keywords ``shall``, ``should``, ``may`` or a level name.

        Returns:
            :obj:`CoverageReport`

        Examples:
            >>> report = pbu.coverage.report('ieee-1028', level='shall')
            >>> render_ratio(report.total.mapped_ratio)
            '1.0000'
        '''
        self._api._trace('coverage.report', approach_id=approach_id,
                         level=level)
        record = self._approach(approach_id)
        level = normalize_conformance(level) if level is not None else None
        status = self._statuses(record)
        instances = [i for i in record.instances
                     if level is None or i.conformance == level]
        levels = [level] if level is not None else list(ConformanceLevel)
        by_level = tuple(_tally(lvl.value, [status[i.id] for i in instances
                                            if i.conformance == lvl])
                         for lvl in levels)
        kinds = sorted({k.kind_name for k in record.kinds}
                       | {i.kind_name for i in instances})
        by_kind = tuple(_tally(kind, [status[i.id] for i in instances
                                      if i.kind_name == kind])
                        for kind in kinds)
        return CoverageReport(record.id, level, by_level, by_kind,
                              _tally('total', [status[i.id] for i in instances]))

    def appraise(self, approach_id, fail_level):
        '''
        Produces the appraisal evidence of an approach: one row per instance
        with its status and the nodes (or exclusion rationale) backing it.
        The verdict fails when any instance at or above ``fail_level`` is
        unaccounted.

        Args:
            approach_id (str): The quality approach.
            fail_level (str): ``shall``, ``should``, ``may`` or a level name.

        Returns:
            :obj:`AppraisalReport`

        Examples:
            >>> pbu.coverage.appraise('ieee-1028', 'shall').verdict
            'pass'
        '''
        self._api._trace('coverage.appraise', approach_id=approach_id,
                         fail_level=fail_level)
        record = self._approach(approach_id)
        fail_level = normalize_conformance(fail_level)
        ws = self._api.workspace
        status = self._statuses(record)
        targets = {}
        for _, mapping in ws.all_mappings():
            for qa_id in mapping.qa_ids:
                targets.setdefault(qa_id, set()).update(mapping.node_ids)
        rationale = {e.qa_id: e.rationale
                     for e in ws.exclusions_for(record.id)}
        rows, verdict = [], 'pass'
        for inst in record.instances:
            state = status[inst.id]
            if state == MAPPED:
                backing = tuple(sorted(targets[inst.id]))
            elif state == EXCLUDED:
                backing = (rationale[inst.id],)
            else:
                backing = ()
                if inst.conformance.at_least(fail_level):
                    verdict = 'fail'
            rows.append(AppraisalRow(inst.id, inst.conformance, state, backing))
        return AppraisalReport(record.id, fail_level, tuple(rows), verdict)

    def census(self, approach_id):
        '''
        Counts the instances of an approach per element kind.

        Args:
            approach_id (str): The quality approach.

        Returns:
            :obj:`InstanceCensus`

        Examples:
            >>> pbu.coverage.census('ieee-1028').total
            83
        '''
        record = self._approach(approach_id)
        counts = Counter(i.kind_name for i in record.instances)
        for kind in record.kinds:
            counts.setdefault(kind.kind_name, 0)
        return InstanceCensus(record.id, dict(sorted(counts.items())),
                              len(record.instances))

    def exclude(self, qa_id, rationale):
        '''
        Records that an instance is deliberately left out of the unified
        process.

        Args:
            qa_id (str): The element instance to exclude.
            rationale (str): Why it is left out.

        Returns:
            :obj:`Exclusion`

        Examples:
            >>> pbu.coverage.exclude('IEEE1028-2008 6.5.2 2',
            ...     'general guideline, not process content')
        '''
        self._api._trace('coverage.exclude', qa_id=qa_id)
        rationale = self._check('rationale', rationale, str)
        ws = self._api.workspace
        instances = ws.instance_index()
        if qa_id not in instances:
            raise UnknownSource('instance {!r} does not exist'.format(qa_id))
        if qa_id in ws.mapped_ids():
            raise AlreadyMapped('instance {!r} is mapped and cannot be '
                                'excluded'.format(qa_id))
        if qa_id in ws.excluded_ids():
            raise DuplicateExclusion('instance {!r} is already '
                                     'excluded'.format(qa_id))
        aid = instances[qa_id].approach_id
        exclusion = Exclusion(qa_id, rationale)
        exclusions = dict(ws.exclusions)
        exclusions[aid] = exclusions.get(aid, ()) + (exclusion,)
        self._api._commit(replace(ws, exclusions=exclusions), [(
            'exclude/{}'.format(aid), 'excluded {}'.format(qa_id), rationale)])
        return exclusion
