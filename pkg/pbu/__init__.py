'''
Welcome to pyPBU's documentation!
=================================

pyPBU is a library and command line tool for Process Based Unification: the
practice of decomposing several quality approaches (standards, maturity
models, inspection methods) into element instances and mapping every one of
them onto a single unified process model.  The library keeps the approaches,
the unified process, the mappings between them and the ledger of decisions
taken along the way in a plain-text workspace directory, and produces the
coverage, appraisal, traceability, version-diff and document-analysis reports
that a multi-model improvement initiative needs.

Installation
------------

.. code-block:: bash

   pip install pypbu

The neutral XML importer needs the optional ``defusedxml`` package:

.. code-block:: bash

   pip install pypbu[xmlimport]

Getting Started
---------------

Materialise the shipped peer-review case study and check it:

.. code-block:: bash

   pbu init --workspace ./peer-review --fixture peer-review
   pbu verify --workspace ./peer-review --process peer-review
   pbu appraise --workspace ./peer-review --approach ieee-1028 --fail-level shall

The same from Python:

.. code-block:: python

   from pbu.unifier import ProcessUnifier
   pbu = ProcessUnifier('./peer-review')
   for finding in pbu.mappings.verify('peer-review').findings:
       print(finding.code, finding.message)
   print(pbu.mappings.trace_to_process('IEEE1028-2008 6.5.3 1'))

Logging
-------

pyPBU uses the standard :mod:`logging` module and never installs handlers of
its own.  Every operation on a session logs a debug record, and every
exception logs its message at error level when it is raised.  To see what is
happening:

.. code-block:: python

   import logging
   logging.basicConfig(level=logging.DEBUG)

License
-------

The project is licensed under the MIT license.
'''
__version__ = '1.0.0'
__author__ = 'pyPBU Developers'
__license__ = 'MIT'
