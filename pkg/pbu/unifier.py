'''
.. autoclass:: ProcessUnifier

.. automodule:: pbu.mappings
.. automodule:: pbu.coverage
.. automodule:: pbu.versions
.. automodule:: pbu.processes
.. automodule:: pbu.graphs
'''
from .base import WorkspaceSession
from .coverage import CoverageAPI
from .mappings import MappingsAPI
from .processes import ProcessesAPI
from .versions import VersionsAPI


class ProcessUnifier(WorkspaceSession):
    '''
    The ProcessUnifier object is the primary interaction point for users to
    work with a unification workspace.  Every operation is reached through
    one of its endpoints.

    Args:
        path (str, optional):
            The workspace directory.  If left unspecified, then the
            ``PBU_WORKSPACE`` environment variable is used.  With neither,
            the unifier works purely in memory.
        workspace (Workspace, optional):
            A workspace value to start from instead of reading ``path``.
        actor (str, optional):
            The name recorded on the decisions the unifier logs.  Falls back
            to ``PBU_ACTOR``, then ``pbu``.

    Examples:
        >>> from pbu.unifier import ProcessUnifier
        >>> pbu = ProcessUnifier('./peer-review')
        >>> pbu.coverage.report('ieee-1028').total.mapped
        82
    '''

    @property
    def coverage(self):
        return CoverageAPI(self)

    @property
    def mappings(self):
        return MappingsAPI(self)

    @property
    def processes(self):
        return ProcessesAPI(self)

    @property
    def versions(self):
        return VersionsAPI(self)
