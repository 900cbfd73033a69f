'''
formats
=======

Readers for the document formats pyPBU consumes besides its own workspace
files.

.. toctree::
    :hidden:
    :glob:

    corpus
    neutralxml
'''
