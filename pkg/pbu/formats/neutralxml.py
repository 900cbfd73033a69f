'''
.. autoclass:: NeutralXMLReader
'''
from pbu.errors import PackageMissingError

try:
    from defusedxml import DefusedXmlException
    from defusedxml.ElementTree import fromstring, parse, ParseError as XMLError
except ImportError:
    raise PackageMissingError(
        'The python package defusedxml is required for NeutralXMLReader')

import logging
from pbu.errors import IoError, ParseError
from pbu.model import EDGE_RELATIONS, NODE_KINDS, ProcessEdge, ProcessModel, ProcessNode
from pbu.workspace import split_list


class NeutralXMLReader(object):
    '''
    The NeutralXMLReader turns a neutral XML process document, as written by
    :meth:`pbu.processes.ProcessesAPI.export_xml`, back into a
    :class:`pbu.model.ProcessModel`.

    Args:
        fobj (File object, string path or str):
            A file-like object, a path to the document, or the document text
            itself (anything starting with ``<``).

    Examples:
        >>> with open('peer-review.xml') as xml_file:
        ...     process = NeutralXMLReader(xml_file).process()
    '''
    def __init__(self, fobj):
        self._log = logging.getLogger('{}.{}'.format(
            self.__module__, self.__class__.__name__))
        self._name = getattr(fobj, 'name', None) if not isinstance(
            fobj, str) else None
        try:
            if isinstance(fobj, str) and fobj.lstrip().startswith('<'):
                self._root = fromstring(fobj.encode('utf-8'))
            else:
                if isinstance(fobj, str):
                    self._name = fobj
                self._root = parse(fobj).getroot()
        except XMLError as err:
            raise ParseError('malformed process document: {}'.format(err),
                             self._name, getattr(err, 'position', (None,))[0])
        except DefusedXmlException as err:
            raise ParseError('unsafe process document: {}'.format(err),
                             self._name)
        except OSError as err:
            raise IoError('cannot read {}: {}'.format(
                self._name, err.strerror or err))

    def _require(self, elem, attr):
        value = elem.get(attr)
        if value is None:
            raise ParseError('<{}> element without {!r} attribute'.format(
                elem.tag, attr), self._name)
        return value

    def process(self):
        '''
        Builds the process model the document describes.

        Returns:
            :obj:`pbu.model.ProcessModel`
        '''
        if self._root.tag != 'process':
            raise ParseError('root element is <{}>, expected <process>'.format(
                self._root.tag), self._name)
        pid = self._require(self._root, 'id')
        nodes, edges = [], []
        for elem in self._root:
            if elem.tag == 'node':
                kind = self._require(elem, 'kind')
                if kind not in NODE_KINDS:
                    raise ParseError('unknown node kind {!r}'.format(kind),
                                     self._name)
                items = elem.get('items')
                nodes.append(ProcessNode(self._require(elem, 'id'), kind,
                    elem.get('name', ''), elem.get('description', ''),
                    elem.get('parent_id'),
                    tuple(split_list(items)) if items is not None else None))
            elif elem.tag == 'edge':
                relation = self._require(elem, 'relation')
                if relation not in EDGE_RELATIONS:
                    raise ParseError('unknown edge relation {!r}'.format(
                        relation), self._name)
                edges.append(ProcessEdge(self._require(elem, 'from'),
                    self._require(elem, 'to'), relation, elem.get('guard')))
            else:
                raise ParseError('unexpected element <{}>'.format(elem.tag),
                                 self._name)
        self._log.debug('read process {} with {} nodes and {} edges'.format(
            pid, len(nodes), len(edges)))
        return ProcessModel(pid, tuple(nodes), tuple(edges))
