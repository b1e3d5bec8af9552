from dataclasses import replace
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosslab.errors import BudgetExceeded, CertificateError, InputTooLarge
from crosslab.graphs import (Graph, complete_bipartite, complete_graph,
                             cycle_graph, empty_graph, path_graph,
                             petersen_graph)
from crosslab.planarity import is_planar
from crosslab.pst_ops import disjoint_union
from crosslab.solver import (SOLVER_EDGE_CEILING, DrawingCertificate,
                             build_certificate, crossing_number,
                             crossing_number_lower_bound, verify_certificate)


def test_planar_inputs_have_zero_crossings():
    for g in (empty_graph(0), path_graph(6), cycle_graph(8),
              complete_graph(4), complete_bipartite(2, 5)):
        value, cert = crossing_number(g)
        assert value == 0
        assert cert.crossings == ()
        assert cert.skeleton == g
        assert verify_certificate(cert)


def test_fixed_values(k5_cert, k6_cert, k33_cert, k44_cert, petersen_cert):
    # fixtures already assert the values; check the witnesses here
    for cert, want in ((k5_cert, 1), (k6_cert, 3), (k33_cert, 1),
                       (k44_cert, 4), (petersen_cert, 2)):
        assert cert.crossing_count == want
        assert verify_certificate(cert)
        assert cert.skeleton.n == cert.base.n + want


def test_additive_over_components():
    k5, k33 = complete_graph(5), complete_bipartite(3, 3)
    assert crossing_number(disjoint_union([k5, cycle_graph(3)]))[0] == 1
    assert crossing_number(disjoint_union([k33, k33]))[0] == 2
    assert crossing_number(disjoint_union([k5, k5]))[0] == 2


def test_edge_ceiling():
    assert complete_graph(8).e == SOLVER_EDGE_CEILING + 7
    with pytest.raises(InputTooLarge):
        crossing_number(complete_graph(8))
    # 21 edges (K7) is still accepted: a small budget yields bounds,
    # not InputTooLarge
    assert complete_graph(7).e == SOLVER_EDGE_CEILING
    with pytest.raises(BudgetExceeded) as info:
        crossing_number(complete_graph(7), budget=5_000)
    assert info.value.lower_bound <= 9 <= info.value.upper_bound
    assert verify_certificate(info.value.certificate)


def test_budget_exceeded_carries_sound_bounds():
    with pytest.raises(BudgetExceeded) as info:
        crossing_number(complete_graph(6), budget=10)
    exc = info.value
    assert exc.lower_bound <= 3 <= exc.upper_bound
    assert exc.certificate is not None
    assert exc.certificate.crossing_count == exc.upper_bound
    assert verify_certificate(exc.certificate)


def test_budget_generous_enough_succeeds():
    value, _ = crossing_number(complete_graph(5), budget=500_000)
    assert value == 1


def test_determinism(k6_cert):
    again = crossing_number(complete_graph(6))[1]
    assert again == k6_cert
    assert again.to_json() == k6_cert.to_json()


def test_certificate_json_round_trip(k6_cert, petersen_cert):
    for cert in (k6_cert, petersen_cert):
        back = DrawingCertificate.from_json(cert.to_json())
        assert back == cert
        assert verify_certificate(back)


def test_build_certificate_rejects_sharing_endpoint():
    g = complete_graph(5)
    # edges 0 and 1 are (0,1) and (0,2): they share vertex 0
    with pytest.raises(CertificateError):
        build_certificate(g, ((0, 1),), ((0,), (0,)) + ((),) * 8)


def test_build_certificate_rejects_bad_orders(k6_cert):
    orders = list(k6_cert.edge_orders)
    orders[0], orders[1] = orders[1], orders[0]
    if orders == list(k6_cert.edge_orders):  # pragma: no cover
        pytest.skip("certificate has symmetric first orders")
    with pytest.raises(CertificateError):
        build_certificate(k6_cert.base, k6_cert.crossings, tuple(orders))


def test_verify_flags_tampered_skeleton(k5_cert):
    bad = replace(k5_cert, skeleton=k5_cert.base)
    assert not verify_certificate(bad)


def test_lower_bound_values():
    assert crossing_number_lower_bound(complete_graph(5)) == 1
    assert crossing_number_lower_bound(complete_graph(6)) == 3
    assert crossing_number_lower_bound(petersen_graph()) == 0
    assert crossing_number_lower_bound(complete_bipartite(4, 4)) == 0
    assert crossing_number_lower_bound(empty_graph(2)) == 0
    # dense regimes switch to the cubic bounds
    assert crossing_number_lower_bound(complete_graph(10)) == 21
    assert crossing_number_lower_bound(complete_graph(16)) == 233


def test_lower_bound_never_exceeds_known_values(k5_cert, k6_cert, k33_cert,
                                                k44_cert, petersen_cert):
    for cert in (k5_cert, k6_cert, k33_cert, k44_cert, petersen_cert):
        assert crossing_number_lower_bound(cert.base) <= cert.crossing_count


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.data())
def test_random_small_graphs(n, data):
    pairs = list(combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, tuple(edges))
    value, cert = crossing_number(g)
    assert (value == 0) == is_planar(g)
    assert crossing_number_lower_bound(g) <= value
    assert verify_certificate(cert)
    assert cert.crossing_count == value


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_monotone_under_edge_removal(data):
    pairs = list(combinations(range(5), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    g = Graph(5, tuple(edges))
    u, v = data.draw(st.sampled_from(sorted(g.edges)))
    value = crossing_number(g)[0]
    assert crossing_number(g.remove_edge(u, v))[0] <= value


def test_solver_matches_unpruned_oracle_everywhere():
    # the pruned search against the brute oracle on every small graph,
    # not just the classic fixtures
    from _oracles import oracle_crossing_number
    from crosslab.classes import all_graphs, max_edges
    from crosslab.enumeration import enumerate_graphs

    spec = all_graphs()
    for n in range(1, 7):
        for e in range(max_edges(spec, n) + 1):
            for g in enumerate_graphs(spec, n, e):
                assert crossing_number(g)[0] == oracle_crossing_number(g)


@pytest.mark.slow
def test_solver_matches_oracle_on_seven_vertices_sparse():
    from _oracles import oracle_crossing_number
    from crosslab.classes import all_graphs
    from crosslab.enumeration import enumerate_graphs

    spec = all_graphs()
    checked = 0
    for e in range(13):
        for g in enumerate_graphs(spec, 7, e):
            assert crossing_number(g)[0] == oracle_crossing_number(g)
            checked += 1
    assert checked > 500
