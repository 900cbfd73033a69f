'''
.. autoclass:: PBUException
.. autoclass:: UnexpectedValueError
.. autoclass:: PackageMissingError
.. autoclass:: UnknownConformance
.. autoclass:: MalformedEscape
.. autoclass:: ParseError
.. autoclass:: IntegrityError
.. autoclass:: IoError
.. autoclass:: WorkspaceLocked
.. autoclass:: Overflow
.. autoclass:: UnknownSource
.. autoclass:: UnknownTarget
.. autoclass:: BadPrimary
.. autoclass:: EmptySide
.. autoclass:: UnknownProcess
.. autoclass:: UnknownApproach
.. autoclass:: UnknownMapping
.. autoclass:: SourceNotInMapping
.. autoclass:: AlreadyMapped
.. autoclass:: DuplicateExclusion
.. autoclass:: NotAnActivity
.. autoclass:: EmptyChildren
.. autoclass:: NotARole
.. autoclass:: NotADataObject
.. autoclass:: BadPartition
.. autoclass:: MissingReassignment
.. autoclass:: InvalidProcess
'''
import logging


class PBUException(Exception):
    '''
    Base exception class that sets up logging and handles some basic
    scaffolding for all other exception classes.  This exception should never
    be directly seen.
    '''
    def __init__(self, msg):
        self._log = logging.getLogger('{}.{}'.format(
            self.__module__, self.__class__.__name__))
        self.msg = str(msg)
        self._log.error(self.msg)

    def __str__(self):
        return self.msg

    def __repr__(self):
        return repr(self.__str__())


class UnexpectedValueError(PBUException):
    '''
    An unexpected value error is thrown whenever the value specified for a
    parameter is outside the bounds of what is expected.  For example, if a
    node kind is expected to be one of the process vocabulary and ``lane`` is
    passed instead, then this Exception is thrown.
    '''
    pass


class PackageMissingError(PBUException):
    '''
    In situations where an optional library is needed, this exception will be
    thrown if the optional library is needed, however is unavailable.
    '''
    pass


class UnknownConformance(PBUException):
    '''
    Raised when a conformance keyword is none of shall, should, may or the
    empty string.
    '''
    pass


class MalformedEscape(PBUException):
    '''
    Raised by :func:`pbu.workspace.unescape_field` on a dangling backslash or
    on an escape sequence outside the workspace vocabulary.
    '''
    pass


class _LocatedError(PBUException):
    '''
    Shared scaffolding for errors that point at a place in a workspace file.

    Attributes:
        filename (str): The offending file.
        line (int): The 1-based line number, or ``None``.
    '''
    def __init__(self, msg, filename=None, line=None):
        self.filename = filename
        self.line = line
        if filename and line:
            msg = '{}:{}: {}'.format(filename, line, msg)
        elif filename:
            msg = '{}: {}'.format(filename, msg)
        PBUException.__init__(self, msg)


class ParseError(_LocatedError):
    '''
    A workspace file could not be read: wrong header, wrong number of columns,
    a bad escape or a value outside its vocabulary.

    Attributes:
        filename (str): The file that failed to parse.
        line (int): The 1-based line number of the offending record.
    '''
    pass


class IntegrityError(_LocatedError):
    '''
    A workspace parsed cleanly but breaks a referential rule: a dangling
    reference, a duplicate identifier or a containment cycle.

    Attributes:
        filename (str): The file holding the offending record.
        line (int): The 1-based line number of the offending record.
    '''
    pass


class IoError(PBUException):
    '''
    Reading or writing the workspace directory failed at the operating system
    level.
    '''
    pass


class WorkspaceLocked(IoError):
    '''
    Another writer holds the workspace lock file.

    Attributes:
        lockfile (str): The path of the lock file that is held.
    '''
    def __init__(self, lockfile):
        self.lockfile = lockfile
        IoError.__init__(self,
            'workspace is locked by another writer ({})'.format(lockfile))


class Overflow(PBUException):
    '''
    The exact candidate mapping count does not fit in a signed 64-bit
    integer.
    '''
    pass


class UnknownSource(PBUException):
    '''
    A quality approach element instance identifier does not exist in the
    workspace.
    '''
    pass


class UnknownTarget(PBUException):
    '''
    A process node identifier does not exist in the process.
    '''
    pass


class BadPrimary(PBUException):
    '''
    The primary source of a mapping is not one of its quality approach
    element instances.
    '''
    pass


class EmptySide(PBUException):
    '''
    One side of a mapping is empty.  Unmapped instances are recorded through
    exclusions, never through a mapping with an empty side.
    '''
    pass


class UnknownProcess(PBUException):
    '''
    The requested process does not exist in the workspace.
    '''
    pass


class UnknownApproach(PBUException):
    '''
    The requested quality approach does not exist in the workspace.
    '''
    pass


class UnknownMapping(PBUException):
    '''
    The requested mapping does not exist in the process.
    '''
    pass


class SourceNotInMapping(PBUException):
    '''
    A rebind named an instance that the mapping does not reference.
    '''
    pass


class AlreadyMapped(PBUException):
    '''
    An exclusion was requested for an instance that is mapped.
    '''
    pass


class DuplicateExclusion(PBUException):
    '''
    The instance already carries an exclusion.
    '''
    pass


class NotAnActivity(PBUException):
    '''
    Only activities can be decomposed into subprocesses.
    '''
    pass


class EmptyChildren(PBUException):
    '''
    A decomposition needs at least one child.
    '''
    pass


class NotARole(PBUException):
    '''
    The node to split is missing or is not a role.
    '''
    pass


class NotADataObject(PBUException):
    '''
    The node to split is missing or is not a data object.
    '''
    pass


class BadPartition(PBUException):
    '''
    The item partition of a split is not two disjoint, nonempty index sets
    covering every item.
    '''
    pass


class MissingReassignment(PBUException):
    '''
    An edge of the node being split was not assigned to either side.

    Attributes:
        edges (list): The ``(relation, counterpart)`` keys left unassigned.
    '''
    def __init__(self, edges):
        self.edges = list(edges)
        PBUException.__init__(self, 'no side chosen for edges {}'.format(
            ', '.join('{}:{}'.format(r, n) for r, n in self.edges)))


class InvalidProcess(PBUException):
    '''
    The process has validation errors and cannot be exported.

    Attributes:
        findings (list): The validation findings that blocked the export.
    '''
    def __init__(self, process_id, findings):
        self.findings = list(findings)
        PBUException.__init__(self,
            'process {} has {} validation error(s); first: {}'.format(
                process_id, len(self.findings),
                self.findings[0].message if self.findings else 'n/a'))
