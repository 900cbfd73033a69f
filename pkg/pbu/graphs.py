'''
graphs
======

Directed graph renderings of process models and reference matrices in the
Graphviz DOT language.  The output is deterministic: nodes and edges are
emitted sorted by identifier, so equal inputs produce identical text.

.. autoclass:: DotGraph
    :members:

.. autofunction:: containment_graph
.. autofunction:: flow_graph
.. autofunction:: matrix_graph
.. autofunction:: export_dot
'''
from .model import FLOW_KINDS


def quote(value):
    '''
    Double-quotes a DOT identifier or label.

    Examples:
        >>> quote('say "hi"')
        '"say \\\\"hi\\\\""'
    '''
    value = str(value).replace('\\', '\\\\').replace('"', '\\"')
    return '"{}"'.format(value.replace('\n', '\\n'))


class DotGraph(object):
    '''
    A minimal directed graph that knows how to write itself as DOT.

    Args:
        name (str, optional): The graph name.  Defaults to ``G``.

    Examples:
        >>> graph = DotGraph()
        >>> graph.add_edge('a', 'b', label='3')
        >>> print(graph.render())
        digraph G {
            "a";
            "b";
            "a" -> "b" [label="3"];
        }
    '''
    def __init__(self, name='G'):
        self.name = name
        self.nodes = {}
        self.edges = {}

    def add_node(self, node_id, label=None):
        if label is not None or node_id not in self.nodes:
            self.nodes[node_id] = label

    def add_edge(self, from_id, to_id, label=None):
        self.nodes.setdefault(from_id, None)
        self.nodes.setdefault(to_id, None)
        self.edges.setdefault((from_id, to_id), set()).add(label)

    def render(self):
        lines = ['digraph {} {{'.format(self.name)]
        for node_id in sorted(self.nodes):
            label = self.nodes[node_id]
            if label is None:
                lines.append('    {};'.format(quote(node_id)))
            else:
                lines.append('    {} [label={}];'.format(
                    quote(node_id), quote(label)))
        for (src, dst) in sorted(self.edges):
            for label in sorted(self.edges[(src, dst)], key=lambda l: l or ''):
                if label is None:
                    lines.append('    {} -> {};'.format(quote(src), quote(dst)))
                else:
                    lines.append('    {} -> {} [label={}];'.format(
                        quote(src), quote(dst), quote(label)))
        lines.append('}')
        return '\n'.join(lines) + '\n'


def _label(node):
    return node.name or node.id


def containment_graph(process):
    '''
    The containment tree of a process: one edge from every parent to each of
    its children.

    Args:
        process (ProcessModel): The process to draw.

    Returns:
        :obj:`DotGraph`
    '''
    graph = DotGraph()
    for node in process.nodes:
        graph.add_node(node.id, _label(node))
    for node in process.nodes:
        if node.parent_id is not None:
            graph.add_edge(node.parent_id, node.id)
    return graph


def flow_graph(process):
    '''
    The control flow of a process: flow nodes and their sequence edges,
    labelled with the edge guards.
    '''
    graph = DotGraph()
    for node in process.nodes:
        if node.kind in FLOW_KINDS:
            graph.add_node(node.id, _label(node))
    for edge in process.edges:
        if edge.relation == 'sequence':
            graph.add_edge(edge.from_id, edge.to_id, edge.guard)
    return graph


def matrix_graph(matrix):
    '''
    A reference matrix as a graph: one edge per ordered area pair with a
    non-zero count, labelled with the count.

    Args:
        matrix (pbu.analysis.xref.ReferenceMatrix): The matrix to draw.
    '''
    graph = DotGraph()
    for area in matrix.areas:
        graph.add_node(area)
    for (src, dst), count in matrix.counts.items():
        if count:
            graph.add_edge(src, dst, str(count))
    return graph


def export_dot(graph):
    '''
    Renders a graph as DOT text.  Accepts a :class:`DotGraph`, a
    :class:`pbu.model.ProcessModel` (drawn as its containment tree) or a
    reference matrix.

    Examples:
        >>> export_dot(DotGraph())
        'digraph G {\\n}\\n'
    '''
    if isinstance(graph, DotGraph):
        return graph.render()
    if hasattr(graph, 'nodes') and hasattr(graph, 'process_id'):
        return containment_graph(graph).render()
    if hasattr(graph, 'counts') and hasattr(graph, 'areas'):
        return matrix_graph(graph).render()
    raise TypeError('graph is of type {}.  Expected DotGraph, ProcessModel '
                    'or ReferenceMatrix.'.format(type(graph).__name__))
