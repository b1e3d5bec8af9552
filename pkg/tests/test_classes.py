from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crosslab.classes import (all_graphs, bipartite, contains,
                              extremal_graph, intersection, kt_free,
                              l_colorable, max_edges, odd_girth_at_least,
                              parse_class_spec)
from crosslab.enumeration import enumerate_graphs
from crosslab.errors import InputError, ParseError
from crosslab.graphs import (Graph, complete_bipartite, complete_graph,
                             cycle_graph, empty_graph, path_graph,
                             petersen_graph)

SPECS = [
    all_graphs(),
    bipartite(),
    kt_free(3),
    kt_free(4),
    l_colorable(2),
    l_colorable(3),
    odd_girth_at_least(5),
    odd_girth_at_least(7),
    intersection(kt_free(4), bipartite()),
]


def test_membership_basics():
    assert contains(all_graphs(), petersen_graph())
    assert contains(bipartite(), complete_bipartite(3, 4))
    assert not contains(bipartite(), cycle_graph(5))
    assert contains(kt_free(3), complete_bipartite(2, 2))
    assert not contains(kt_free(3), complete_graph(3))
    assert contains(kt_free(4), complete_graph(3))
    assert not contains(kt_free(4), complete_graph(4))
    assert contains(l_colorable(3), complete_graph(3))
    assert not contains(l_colorable(3), complete_graph(4))
    # Petersen needs 3 colors and has odd girth 5
    assert contains(l_colorable(3), petersen_graph())
    assert not contains(l_colorable(2), petersen_graph())
    assert contains(odd_girth_at_least(5), petersen_graph())
    assert not contains(odd_girth_at_least(7), petersen_graph())
    assert contains(odd_girth_at_least(5), cycle_graph(4))  # no odd cycle at all
    assert not contains(odd_girth_at_least(5), complete_graph(3))


def test_intersection_membership():
    spec = intersection(kt_free(4), bipartite())
    assert contains(spec, complete_bipartite(2, 5))
    assert not contains(spec, complete_graph(3))


def test_odd_girth_parameter_must_be_odd():
    with pytest.raises(InputError):
        odd_girth_at_least(4)
    with pytest.raises(InputError):
        kt_free(1)
    with pytest.raises(InputError):
        l_colorable(0)


def test_label_round_trip():
    for spec in SPECS:
        assert parse_class_spec(spec.label()) == spec


def test_parse_errors():
    for text in ("", "nope", "kt_free", "kt_free(x)", "intersection(all",
                 "odd_girth_at_least(4)"):
        with pytest.raises((ParseError, InputError)):
            parse_class_spec(text)


def test_parse_tolerates_spaces():
    assert parse_class_spec(" bipartite ") == bipartite()
    assert parse_class_spec("intersection(kt_free(3), bipartite)") == \
        intersection(kt_free(3), bipartite())


def test_max_edges_formulas():
    # complete, Mantel, Turan, bipartite
    assert [max_edges(all_graphs(), n) for n in range(1, 7)] == [0, 1, 3, 6, 10, 15]
    assert [max_edges(bipartite(), n) for n in range(1, 7)] == [0, 1, 2, 4, 6, 9]
    assert [max_edges(kt_free(3), n) for n in range(1, 7)] == [0, 1, 2, 4, 6, 9]
    assert max_edges(kt_free(4), 6) == 12   # Turan T(6,3)
    assert max_edges(l_colorable(3), 6) == 12
    assert max_edges(l_colorable(2), 8) == 16
    assert max_edges(odd_girth_at_least(5), 6) == 9


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
def test_max_edges_matches_enumeration(spec):
    """The closed-form ceiling agrees with brute force on small n."""
    for n in range(1, 6):
        best = 0
        for e in range(n * (n - 1) // 2, -1, -1):
            if enumerate_graphs(spec, n, e):
                best = e
                break
        assert max_edges(spec, n) == best


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
def test_extremal_graph_is_extremal(spec):
    for n in range(1, 8):
        g = extremal_graph(spec, n)
        assert g.n == n
        assert contains(spec, g)
        assert g.e == max_edges(spec, n)


def test_subgraph_closure_on_samples():
    """Every spec kind names a subgraph-closed family."""
    samples = {
        all_graphs(): complete_graph(5),
        bipartite(): complete_bipartite(3, 3),
        kt_free(3): cycle_graph(5),
        kt_free(4): complete_bipartite(3, 3),
        l_colorable(3): complete_graph(3),
        odd_girth_at_least(5): petersen_graph(),
    }
    for spec, g in samples.items():
        assert contains(spec, g)
        for u, v in g.edges:
            assert contains(spec, g.remove_edge(u, v))
        assert contains(spec, g.induced_subgraph(range(g.n - 1)))


@given(st.integers(0, 6), st.data())
def test_bipartite_iff_no_odd_cycle(n, data):
    pairs = list(combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, tuple(edges))
    odd = any(
        len(cyc) % 2
        for cyc in _all_cycles(g)
    )
    assert contains(bipartite(), g) == (not odd)


def _all_cycles(g):
    """Vertex sets of all cycles, the dumb way (n <= 6)."""
    from itertools import permutations
    seen = set()
    for k in range(3, g.n + 1):
        for vs in combinations(range(g.n), k):
            for order in permutations(vs[1:]):
                walk = (vs[0],) + order
                if all(g.has_edge(walk[i], walk[(i + 1) % k]) for i in range(k)):
                    if frozenset(walk) not in seen:
                        seen.add(frozenset(walk))
                        yield walk
                    break


def test_empty_graph_in_every_class():
    for spec in SPECS:
        assert contains(spec, empty_graph(4))
        assert contains(spec, path_graph(2))  # classes contain an edge
