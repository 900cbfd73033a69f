'''
fixtures
========

Ready-made workspaces.  ``FIXTURES`` maps the name accepted by
``pbu init --fixture`` to the function building the workspace value.

.. automodule:: pbu.fixtures.peer_review
'''
from .peer_review import build_peer_review

FIXTURES = {
    'peer-review': build_peer_review,
}
