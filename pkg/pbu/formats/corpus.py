'''
.. autoclass:: CorpusReader
.. autofunction:: read_lines
.. autofunction:: read_area_names
'''
import logging, os
from pbu.analysis.xref import AreaDocument
from pbu.errors import IoError, ParseError


def _read(path):
    try:
        with open(path, encoding='utf-8') as fobj:
            return fobj.read()
    except UnicodeDecodeError as err:
        raise ParseError('not UTF-8 text: {}'.format(err), path)
    except OSError as err:
        raise IoError('cannot read {}: {}'.format(path, err.strerror))


def read_lines(path):
    '''
    Reads a one-entry-per-line UTF-8 file, skipping blank lines.

    Returns:
        :obj:`list`: The stripped entries, in file order.
    '''
    return [line.strip() for line in _read(path).splitlines() if line.strip()]


def read_area_names(path):
    '''
    Reads an area list.  A line is either a name or ``<area_id><TAB><name>``.

    Returns:
        :obj:`list`: Names, and ``(area_id, name)`` pairs for tabbed lines.
    '''
    entries = []
    for line in _read(path).splitlines():
        if not line.strip():
            continue
        if '\t' in line:
            area_id, name = line.split('\t', 1)
            entries.append((area_id.strip(), name.strip()))
        else:
            entries.append(line.strip())
    return entries


class CorpusReader(object):
    '''
    The CorpusReader iterates over a directory of ``<area_id>.txt`` UTF-8
    documents in file name order.

    Args:
        path (str): The corpus directory.

    Examples:
        >>> for doc in CorpusReader('cmmi-dev/'):
        ...     print(doc.area_id, len(doc.text))
    '''
    def __init__(self, path):
        self._log = logging.getLogger('{}.{}'.format(
            self.__module__, self.__class__.__name__))
        if not os.path.isdir(path):
            raise IoError('corpus directory {} does not exist'.format(path))
        self.path = path

    def documents(self):
        '''
        Returns every document of the corpus.

        Returns:
            :obj:`list`: :class:`pbu.analysis.xref.AreaDocument` values.
        '''
        docs = []
        for name in sorted(os.listdir(self.path)):
            if not name.endswith('.txt'):
                continue
            docs.append(AreaDocument(name[:-4],
                                     _read(os.path.join(self.path, name))))
        self._log.debug('read {} documents from {}'.format(len(docs),
                                                           self.path))
        return docs

    def text(self):
        '''
        The whole corpus as one text, documents joined by newlines.
        '''
        return '\n'.join(doc.text for doc in self.documents())

    def __iter__(self):
        return iter(self.documents())
