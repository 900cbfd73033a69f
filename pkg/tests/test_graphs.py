from pbu.graphs import *
from pbu.model import ProcessEdge, ProcessModel, ProcessNode
import pytest

TINY = ProcessModel('p', (
    ProcessNode('p', 'process', 'Review'),
    ProcessNode('s', 'start-event', parent_id='p'),
    ProcessNode('g', 'gateway', 'Ready?', parent_id='p'),
    ProcessNode('a', 'activity', 'Say "hi"', parent_id='p'),
    ProcessNode('e', 'end-event', 'End', parent_id='p'),
    ProcessNode('r', 'role', 'Reader', parent_id='p'),
), (
    ProcessEdge('s', 'g', 'sequence'),
    ProcessEdge('g', 'a', 'sequence', 'yes'),
    ProcessEdge('g', 'e', 'sequence', 'no'),
    ProcessEdge('a', 'e', 'sequence'),
    ProcessEdge('r', 'a', 'performs'),
))


@pytest.mark.parametrize('raw, quoted', [
    ('plain', '"plain"'),
    ('say "hi"', '"say \\"hi\\""'),
    ('back\\slash', '"back\\\\slash"'),
    ('two\nlines', '"two\\nlines"'),
    (3, '"3"'),
])
def test_graphs_quote(raw, quoted):
    assert quote(raw) == quoted


def test_graphs_dotgraph_render():
    graph = DotGraph()
    graph.add_edge('b', 'a', label='3')
    graph.add_edge('a', 'b')
    graph.add_node('a', 'Alpha')
    assert graph.render() == ('digraph G {\n'
                              '    "a" [label="Alpha"];\n'
                              '    "b";\n'
                              '    "a" -> "b";\n'
                              '    "b" -> "a" [label="3"];\n'
                              '}\n')


def test_graphs_dotgraph_parallel_edges():
    graph = DotGraph('flows')
    graph.add_edge('a', 'b', 'yes')
    graph.add_edge('a', 'b')
    graph.add_edge('a', 'b', 'no')
    lines = graph.render().splitlines()
    assert lines[0] == 'digraph flows {'
    assert lines[3:6] == ['    "a" -> "b";', '    "a" -> "b" [label="no"];',
                          '    "a" -> "b" [label="yes"];']


def test_graphs_containment_graph():
    graph = containment_graph(TINY)
    assert set(graph.nodes) == {'p', 's', 'g', 'a', 'e', 'r'}
    assert set(graph.edges) == {('p', n) for n in 'sgaer'}
    assert graph.nodes['s'] == 's'
    assert graph.nodes['g'] == 'Ready?'


def test_graphs_flow_graph():
    graph = flow_graph(TINY)
    assert 'r' not in graph.nodes
    assert 'p' not in graph.nodes
    assert graph.edges[('g', 'a')] == {'yes'}
    assert graph.edges[('s', 'g')] == {None}
    assert ('r', 'a') not in graph.edges
    assert '"a" [label="Say \\"hi\\""];' in graph.render()


def test_graphs_export_dot_is_deterministic(peer_review):
    process = peer_review.process('peer-review')
    shuffled = ProcessModel(process.process_id, tuple(reversed(process.nodes)),
                            tuple(reversed(process.edges)))
    assert export_dot(process) == export_dot(shuffled)
    assert export_dot(process) == containment_graph(process).render()


def test_graphs_flow_graph_fixture(peer_review):
    graph = flow_graph(peer_review.process('peer-review'))
    assert graph.edges[('gw-exit-decision', 'sign-summary-report')] == {
        'accepted'}
    assert 'role-moderator' not in graph.nodes
    assert 'entry-criteria' not in graph.nodes


def test_graphs_export_dot_empty():
    assert export_dot(DotGraph()) == 'digraph G {\n}\n'


def test_graphs_export_dot_typeerror():
    with pytest.raises(TypeError):
        export_dot('digraph')


def test_graphs_matrix_graph_skips_zero_counts():
    from pbu.analysis.xref import ReferenceEdge, reference_matrix
    graph = matrix_graph(reference_matrix([ReferenceEdge('A', 'B', 2),
                                           ReferenceEdge('B', 'C', 0)]))
    assert graph.edges == {('A', 'B'): {'2'}}
    assert 'A' in graph.nodes and 'B' in graph.nodes
