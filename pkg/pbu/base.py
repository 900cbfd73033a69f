'''
.. autoclass:: UnifierEndpoint
.. autoclass:: WorkspaceSession
'''
import json, logging, os, re
from contextlib import nullcontext
from dateutil.parser import isoparse
from .errors import UnexpectedValueError, UnknownApproach, UnknownProcess
from .model import Decision, Workspace, validate_identifier
from .utils import utc_timestamp
from .workspace import WorkspaceLock, load_workspace, save_workspace


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


class UnifierEndpoint(object):
    '''
    UnifierEndpoint is the base model for which all endpoint classes are
    sired from.  The main benefit is the addition of the ``_check()``
    function from which it's possible to check the type & content of a
    variable to ensure that we are passing good data to the workspace.

    Args:
        api (WorkspaceSession):
            The session (or sired child) instance that the endpoint will be
            reading from and committing to.
    '''
    def __init__(self, api):
        self._api = api
        self._log = logging.getLogger('{}.{}'.format(
            self.__module__, self.__class__.__name__))

    def _check(self, name, obj, expected_type,
               choices=None, default=None, case=None, pattern=None):
        '''
        Internal function for validating that inputs we are receiving are of
        the right type, have the expected values, and can handle defaults as
        necessary.

        Args:
            name (str): The name of the object (for exception reporting)
            obj (obj): The object that we will be checking
            expected_type (type):
                The expected type of object that we will check against.  The
                pseudo-type ``'identifier'`` checks a string with
                :func:`pbu.model.validate_identifier`.
            choices (list, optional):
                if the object is only expected to have a finite number of
                values then we can check to make sure that our input is one of
                these values.
            default (obj, optional):
                if we want to return a default setting if the object is None,
                we can set one here.
            case (string, optional):
                if we want to force string values to be upper or lower case,
                then set this to either ``upper`` or ``lower``.
            pattern (string, optional):
                If we want to validate the input based on a regex pattern, then
                we should specify one here.

        Returns:
             obj: Either the object or the default object depending.
        '''
        def conv(value):
            if case == 'lower' and isinstance(value, str):
                return value.lower()
            if case == 'upper' and isinstance(value, str):
                return value.upper()
            return value

        # A missing value falls back to the default (which may itself be None).
        if obj is None:
            return default
        obj = conv(obj)

        etypes = list(expected_type) if isinstance(
            expected_type, (list, tuple)) else [expected_type]
        identifier = 'identifier' in etypes
        if identifier:
            etypes[etypes.index('identifier')] = str

        if not any(isinstance(obj, etype) for etype in etypes):
            raise TypeError('{} is of type {}.  Expected {}.'.format(
                name, obj.__class__.__name__, ', '.join(
                    getattr(t, '__name__', str(t)) for t in etypes)))

        # Collections are checked member by member; everything else is
        # checked as a single value.
        values = list(obj) if isinstance(
            obj, (list, tuple, set, frozenset)) else [obj]
        for value in values:
            value = conv(value)
            if identifier and not validate_identifier(value):
                raise UnexpectedValueError(
                    '{} has value of {!r}.  Expected an identifier'.format(
                        name, value))
            if choices is not None and value not in choices:
                raise UnexpectedValueError(
                    '{} has value of {}.  Expected one of {}'.format(
                        name, value, ','.join(str(i) for i in choices)))
            if pattern and isinstance(value, str) and not re.search(
                    pattern, value):
                raise UnexpectedValueError(
                    '{} has value of {}.  Does not match pattern {}'.format(
                        name, value, pattern))
        return obj

    def _process(self, process_id):
        process = self._api.workspace.process(process_id)
        if process is None:
            raise UnknownProcess('process {!r} does not exist'.format(
                process_id))
        return process

    def _approach(self, approach_id):
        record = self._api.workspace.approach(approach_id)
        if record is None:
            raise UnknownApproach('approach {!r} does not exist'.format(
                approach_id))
        return record


class WorkspaceSession(object):
    '''
    The WorkspaceSession is the base model that the endpoints are grafted
    onto.  It holds the current :class:`pbu.model.Workspace` value and is the
    single writer for the directory it was loaded from.

    Args:
        path (str, optional):
            The workspace directory.  If left unspecified, then the
            ``PBU_WORKSPACE`` environment variable is used.  With neither, the
            session works purely in memory.
        workspace (Workspace, optional):
            A workspace value to start from instead of loading ``path``.
        actor (str, optional):
            The name recorded on automatic decision entries.  Falls back to
            the ``PBU_ACTOR`` environment variable, then ``pbu``.
    '''
    def __init__(self, path=None, workspace=None, actor=None):
        self._log = logging.getLogger('{}.{}'.format(
            self.__module__, self.__class__.__name__))
        self._path = path if path else os.getenv('PBU_WORKSPACE')
        self._actor = actor if actor else os.getenv('PBU_ACTOR', 'pbu')
        if workspace is not None:
            self._workspace = workspace
        elif self._path:
            self._workspace = load_workspace(self._path)
        else:
            self._workspace = Workspace()

    @property
    def path(self):
        return self._path

    @property
    def workspace(self):
        return self._workspace

    def _trace(self, operation, **params):
        self._log.debug(json.dumps({
            'operation': operation,
            'params': params,
        }, default=_jsonable, sort_keys=True))

    def reload(self):
        '''
        Re-reads the workspace directory, discarding the in-memory value.
        '''
        if self._path:
            self._workspace = load_workspace(self._path)
        return self._workspace

    def _decision(self, context, decision, rationale, after=None):
        stamp = utc_timestamp()
        decisions = after if after is not None else self._workspace.decisions
        if decisions and isoparse(decisions[-1].timestamp) > isoparse(stamp):
            stamp = decisions[-1].timestamp
        return Decision(stamp, self._actor, context, decision, rationale)

    def _commit(self, workspace, entries=()):
        '''
        Makes ``workspace`` the current value, appending one decision per
        ``(context, decision, rationale)`` entry, and saves it when the
        session is backed by a directory.
        '''
        decisions = tuple(workspace.decisions)
        for context, decision, rationale in entries:
            decisions += (self._decision(context, decision, rationale,
                                         after=decisions),)
        workspace = Workspace(workspace.approaches, workspace.processes,
            workspace.mappings, workspace.exclusions, decisions)
        if self._path:
            with WorkspaceLock(self._path):
                save_workspace(workspace, self._path)
        self._workspace = workspace
        return workspace

    def save(self, path=None):
        '''
        Writes the current workspace to ``path`` (or the session directory).
        '''
        target = path or self._path
        if target:
            with WorkspaceLock(target) if os.path.isdir(target) else nullcontext():
                save_workspace(self._workspace, target)
        return target
