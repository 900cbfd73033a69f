'''
versions
========

Quality approaches are revised.  The following methods compare two versions
of an approach, find the mappings that a revision invalidates, and repair
them.  Instances are matched across versions by identifier.

Methods available on ``pbu.versions``:

.. rst-class:: hide-signature
.. autoclass:: VersionsAPI

    .. automethod:: adopt
    .. automethod:: diff
    .. automethod:: rebind
    .. automethod:: stale

.. autoclass:: VersionDiff
.. autoclass:: StaleReport
.. autofunction:: diff_versions
'''
from dataclasses import dataclass, replace
from .base import UnifierEndpoint
from .errors import (
    SourceNotInMapping, UnexpectedValueError, UnknownMapping, UnknownSource)
from .mappings import retire_exclusions
from .model import ApproachRecord

COMPARED_FIELDS = ('kind_name', 'conformance', 'text', 'parent_id', 'order')


@dataclass(frozen=True)
class VersionDiff:
    '''
    Attributes:
        added (tuple): Instance ids only in the new version.
        removed (tuple): Instance ids only in the old version.
        modified (tuple):
            ``(qa_id, changed_fields)`` pairs for ids in both versions whose
            fields differ.
    '''
    added: tuple = ()
    removed: tuple = ()
    modified: tuple = ()

    @property
    def modified_ids(self):
        return tuple(qa_id for qa_id, _ in self.modified)

    def __bool__(self):
        return bool(self.added or self.removed or self.modified)


@dataclass(frozen=True)
class StaleReport:
    '''
    Attributes:
        broken (tuple): ``(mapping_id, qa_id)`` pairs naming removed ids.
        review (tuple): ``(mapping_id, qa_id)`` pairs naming modified ids.
    '''
    broken: tuple = ()
    review: tuple = ()

    def __bool__(self):
        return bool(self.broken or self.review)


def diff_versions(old, new):
    '''
    Compares two snapshots of a quality approach.

    Args:
        old (ApproachRecord): The earlier version.
        new (ApproachRecord): The later version.

    Returns:
        :obj:`VersionDiff`

    Examples:
        >>> diff = diff_versions(old, new)
        >>> diff.modified
        (('VER SP 2.1 TWP1', ('kind_name',)),)
    '''
    before = {i.id: i for i in old.instances}
    after = {i.id: i for i in new.instances}
    modified = []
    for qa_id in sorted(set(before) & set(after)):
        changed = tuple(f for f in COMPARED_FIELDS
                        if getattr(before[qa_id], f) != getattr(after[qa_id], f))
        if changed:
            modified.append((qa_id, changed))
    return VersionDiff(tuple(sorted(set(after) - set(before))),
                       tuple(sorted(set(before) - set(after))),
                       tuple(modified))


class VersionsAPI(UnifierEndpoint):
    def _snapshot(self, value):
        if isinstance(value, ApproachRecord):
            return value
        return self._approach(value)

    def diff(self, old, new):
        '''
        Compares two versions of an approach.

        Args:
            old (ApproachRecord or str):
                The earlier snapshot, or the id of an approach in this
                workspace.
            new (ApproachRecord or str): The later snapshot or approach id.

        Returns:
            :obj:`VersionDiff`
        '''
        return diff_versions(self._snapshot(old), self._snapshot(new))

    def stale(self, process_id, diff):
        '''
        Lists the mappings of a process that a version change touches.

        Args:
            process_id (str): The process whose mappings are checked.
            diff (VersionDiff): The change between two versions.

        Returns:
            :obj:`StaleReport`

        Examples:
            >>> report = pbu.versions.stale('peer-review', diff)
            >>> report.broken
            (('m-0052', 'VER SP2.1 SUBP4'),)
        '''
        self._api._trace('versions.stale', process_id=process_id)
        self._process(process_id)
        removed, modified = set(diff.removed), set(diff.modified_ids)
        broken, review = [], []
        for mapping in self._api.workspace.mappings_for(process_id):
            for qa_id in sorted(mapping.qa_ids):
                if qa_id in removed:
                    broken.append((mapping.id, qa_id))
                elif qa_id in modified:
                    review.append((mapping.id, qa_id))
        return StaleReport(tuple(sorted(broken)), tuple(sorted(review)))

    def rebind(self, process_id, mapping_id, old_qa_id, new_qa_id):
        '''
        Replaces one instance of a mapping by another, typically after a
        version change renamed it.  An exclusion of the new instance is
        retired.

        Args:
            process_id (str): The process holding the mapping.
            mapping_id (str): The mapping to repair.
            old_qa_id (str): The instance to replace.
            new_qa_id (str): The instance to put in its place.

        Returns:
            :obj:`pbu.model.Mapping`: The repaired mapping.

        Examples:
            >>> pbu.versions.rebind('peer-review', 'm-0052',
            ...     'VER SP2.1 SUBP4', 'VER SP2.1 SUBP4a')
        '''
        self._api._trace('versions.rebind', process_id=process_id,
            mapping_id=mapping_id, old_qa_id=old_qa_id, new_qa_id=new_qa_id)
        self._process(process_id)
        ws = self._api.workspace
        current = ws.mappings_for(process_id)
        found = [m for m in current if m.id == mapping_id]
        if not found:
            raise UnknownMapping('mapping {!r} does not exist in {}'.format(
                mapping_id, process_id))
        mapping = found[0]
        if old_qa_id not in mapping.qa_ids:
            raise SourceNotInMapping('mapping {} does not reference {!r}'.format(
                mapping_id, old_qa_id))
        if new_qa_id not in ws.instance_index():
            raise UnknownSource('instance {!r} does not exist'.format(
                new_qa_id))
        primary = mapping.primary_source
        if primary == old_qa_id:
            primary = new_qa_id
        rebound = replace(mapping,
            qa_ids=(mapping.qa_ids - {old_qa_id}) | {new_qa_id},
            primary_source=primary)
        mappings = dict(ws.mappings)
        mappings[process_id] = tuple(rebound if m.id == mapping_id else m
                                     for m in current)
        exclusions, retired = retire_exclusions(ws, {new_qa_id}, mapping_id)
        self._api._commit(replace(ws, mappings=mappings,
                                  exclusions=exclusions), [(
            'rebind/{}'.format(process_id),
            'rebound {} from {} to {}'.format(mapping_id, old_qa_id, new_qa_id),
            'source instance changed between approach versions')] + retired)
        return rebound

    def adopt(self, approach_id, snapshot):
        '''
        Replaces the instances of an approach with those of a new version.
        Mappings are kept as they are, so :meth:`stale` and
        :meth:`pbu.mappings.MappingsAPI.verify` can report what the new
        version breaks.  Exclusions and relations that name instances missing
        from the new version are dropped.

        Args:
            approach_id (str): The approach being upgraded.
            snapshot (ApproachRecord): The new version, with the same id.

        Returns:
            :obj:`VersionDiff`: The change that was adopted.
        '''
        self._api._trace('versions.adopt', approach_id=approach_id)
        old = self._approach(approach_id)
        if not isinstance(snapshot, ApproachRecord):
            raise TypeError('snapshot is of type {}.  Expected '
                            'ApproachRecord.'.format(type(snapshot).__name__))
        if snapshot.id != approach_id:
            raise UnexpectedValueError('snapshot is of approach {}, not '
                                       '{}'.format(snapshot.id, approach_id))
        ws = self._api.workspace
        others = {i.id for a in ws.approaches if a.id != approach_id
                  for i in a.instances}
        clash = sorted(others & {i.id for i in snapshot.instances})
        if clash:
            raise UnexpectedValueError('instance ids {} already belong to '
                                       'other approaches'.format(', '.join(clash)))
        diff = diff_versions(old, snapshot)
        known = others | {i.id for i in snapshot.instances}
        approaches = []
        for record in ws.approaches:
            if record.id == approach_id:
                record = snapshot
            approaches.append(replace(record, relations=tuple(
                r for r in record.relations if r.to_id in known)))
        exclusions = dict(ws.exclusions)
        exclusions[approach_id] = tuple(e for e in ws.exclusions_for(approach_id)
                                        if e.qa_id in known)
        self._api._commit(replace(ws, approaches=tuple(approaches),
                                  exclusions=exclusions), [(
            'adopt/{}'.format(approach_id),
            'adopted version {} ({} added, {} removed, {} modified)'.format(
                snapshot.approach.version_label or '?', len(diff.added),
                len(diff.removed), len(diff.modified)),
            'new version of the quality approach')])
        return diff
