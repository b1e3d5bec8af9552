"""Convex (one-page) drawings used as cheap upper-bound witnesses.

Vertices sit on the parabola y = x² at integer abscissae given by a
placement, edges are straight chords. Two chords cross iff their
endpoint positions interleave, so the crossing set is a pure function
of the circular order. Interleaving chords are never parallel (if
a < c < b < d then a+b < c+d), and no vertex can lie on a chord between
two other parabola points, so every intersection is a proper crossing
with an exact rational abscissa; ties between crossings on one edge
(three concurrent chords) can be broken either way, each resolution
being realizable by a small perturbation.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graphs import Graph


def _interleaves(a: int, b: int, c: int, d: int) -> bool:
    # both pairs pre-sorted
    return (a < c < b < d) or (c < a < d < b)


def count_convex_crossings(g: Graph, pos) -> int:
    """Crossings of the straight-line drawing with vertex v at abscissa pos[v]."""
    spans = [tuple(sorted((pos[u], pos[v]))) for u, v in g.edges]
    total = 0
    for i in range(len(spans)):
        a, b = spans[i]
        for j in range(i + 1, len(spans)):
            c, d = spans[j]
            if _interleaves(a, b, c, d):
                total += 1
    return total


def convex_drawing_data(g: Graph, pos):
    """Crossing pairs and per-edge crossing orders of a convex placement.

    Returns (crossings, edge_orders) in the solver's certificate
    encoding: crossings is a sorted tuple of edge-index pairs, orders
    list each edge's crossings by exact rational position along the
    chord walking away from the edge's smaller-numbered endpoint.
    """
    edges = g.edges
    spans = [tuple(sorted((pos[u], pos[v]))) for u, v in edges]
    crossings = []
    for i in range(len(edges)):
        a, b = spans[i]
        for j in range(i + 1, len(edges)):
            c, d = spans[j]
            if _interleaves(a, b, c, d):
                crossings.append((i, j))
    crossings.sort()

    # abscissa of the crossing point of two interleaving chords
    def cross_x(ci: int) -> Fraction:
        i, j = crossings[ci]
        a, b = spans[i]
        c, d = spans[j]
        return Fraction(a * b - c * d, (a + b) - (c + d))

    orders = []
    for i, (u, v) in enumerate(edges):
        incident = [c for c, pair in enumerate(crossings) if i in pair]
        sign = 1 if pos[u] < pos[v] else -1
        incident.sort(key=lambda c: (sign * cross_x(c), c))
        orders.append(tuple(incident))
    return tuple(crossings), tuple(orders)


def best_convex_placement(g: Graph, seed: int = 0, restarts: int = 5):
    """Locally optimal convex placement, deterministic for a given seed.

    Hill-climbs position swaps from the identity plus `restarts` seeded
    shuffles and returns (pos, crossings) for the best placement found.
    Swapping two positions only affects edges at those vertices, but at
    this scale (e <= 21) whole recounts are cheap enough.
    """
    n = g.n
    if n <= 3 or len(g.edges) <= 2:
        return list(range(n)), 0
    rng = np.random.default_rng(seed)
    starts = [list(range(n))]
    for _ in range(restarts):
        starts.append([int(x) for x in rng.permutation(n)])
    best_pos, best_cnt = None, None
    for pos in starts:
        cnt = count_convex_crossings(g, pos)
        improved = True
        while improved and cnt > 0:
            improved = False
            for u in range(n):
                for v in range(u + 1, n):
                    pos[u], pos[v] = pos[v], pos[u]
                    c2 = count_convex_crossings(g, pos)
                    if c2 < cnt:
                        cnt = c2
                        improved = True
                    else:
                        pos[u], pos[v] = pos[v], pos[u]
        if best_cnt is None or cnt < best_cnt:
            best_pos, best_cnt = list(pos), cnt
        if best_cnt == 0:
            break
    return best_pos, best_cnt
