'''
analysis
========

Quantitative analysis of quality approach documents.  Neither pipeline needs
a workspace; both work on plain text read with :mod:`pbu.formats.corpus`.

.. toctree::
    :hidden:
    :glob:

    wordfreq
    xref
'''
from .xref import (
    AreaDocument, CouplingStats, ReferenceEdge, ReferenceMatrix,
    coupling_stats, extract_cross_references, reference_matrix)
from .wordfreq import (
    FrequencyTable, MiningConfig, porter_stem, tokenize_and_count)
