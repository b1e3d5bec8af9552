import pytest
from hypothesis import given
from hypothesis import strategies as st

from crosslab.errors import InputError, ParseError, VertexNotFound
from crosslab.graphs import (Graph, complete_bipartite, complete_graph,
                             cycle_graph, empty_graph, from_graph6,
                             path_graph, petersen_graph, to_graph6)
from crosslab.pst_ops import disjoint_union


def random_graph(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(edges))


graphs_st = st.composite(random_graph)()


def test_edges_normalized():
    g = Graph(4, [(2, 0), (0, 2), (3, 1)])
    assert g.edges == ((0, 2), (1, 3))
    assert g.e == 2


def test_loops_rejected():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])


def test_out_of_range_edge():
    with pytest.raises(VertexNotFound):
        Graph(2, [(0, 2)])


def test_negative_n():
    with pytest.raises(InputError):
        Graph(-1, [])


def test_named_constructors():
    assert complete_graph(5).e == 10
    assert complete_bipartite(3, 4).e == 12
    assert cycle_graph(6).degrees() == (2,) * 6
    assert path_graph(4).degrees() == (1, 2, 2, 1)
    assert empty_graph(7).e == 0
    p = petersen_graph()
    assert (p.n, p.e) == (10, 15)
    assert p.degrees() == (3,) * 10
    assert p.girth() == 5


def test_degree_and_neighbors():
    g = complete_bipartite(2, 3)
    assert g.degree(0) == 3
    assert g.neighbors(0) == (2, 3, 4)
    assert g.max_degree() == 3
    with pytest.raises(VertexNotFound):
        g.degree(9)


def test_connectivity():
    g = disjoint_union([cycle_graph(3), path_graph(2)])
    assert not g.is_connected()
    assert sorted(len(c) for c in g.connected_components()) == [2, 3]
    assert complete_graph(4).is_connected()
    # isolated vertices form their own components
    assert len(empty_graph(3).connected_components()) == 3


def test_complement_involution():
    g = petersen_graph()
    assert g.complement().complement() == g
    assert g.complement().e == 45 - 15


def test_induced_subgraph_relabels():
    g = complete_graph(5)
    h = g.induced_subgraph([1, 3, 4])
    assert h == complete_graph(3)


def test_remove_edge():
    g = cycle_graph(4).remove_edge(3, 0)
    assert g == path_graph(4)
    with pytest.raises(InputError):
        g.remove_edge(0, 3)


def test_relabel_rejects_non_bijection():
    with pytest.raises(InputError):
        complete_graph(3).relabel([0, 0, 1])


def test_girth():
    assert complete_graph(3).girth() == 3
    assert cycle_graph(7).girth() == 7
    assert path_graph(5).girth() is None
    assert complete_bipartite(2, 3).girth() == 4


def test_graph6_known_values():
    # standard encodings from the format definition
    assert to_graph6(complete_graph(4)) == "C~"
    assert from_graph6("C~") == complete_graph(4)
    assert to_graph6(empty_graph(0)) == "?"
    assert from_graph6("?").n == 0


def test_graph6_rejects_garbage():
    for text in ("", "C~extra", "\x7f\x7f", "C"):
        with pytest.raises(ParseError):
            from_graph6(text)


@given(graphs_st)
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs_st)
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees()) == 2 * g.e


@given(graphs_st, st.randoms(use_true_random=False))
def test_relabel_preserves_shape(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.e == g.e
    assert sorted(h.degrees()) == sorted(g.degrees())


def test_disjoint_union_offsets():
    g = disjoint_union([complete_graph(2), complete_graph(3)])
    assert g.n == 5
    assert g.edges == ((0, 1), (2, 3), (2, 4), (3, 4))
    with pytest.raises(InputError):
        disjoint_union([])
