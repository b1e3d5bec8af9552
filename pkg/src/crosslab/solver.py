"""Exact crossing numbers of small graphs, with checkable drawing certificates.

The search is iterative deepening on the number of crossings k: a graph
has a drawing with k crossings iff for some set of k pairwise-distinct
crossing pairs of independent edges, and some order of the crossings
along each multiply-crossed edge, the planarization skeleton (every
crossing replaced by a degree-4 dummy vertex) is planar. Subsets are
scanned lexicographically, so the first feasible k is Cr(G) and the
reported crossing set is the lexicographically least feasible one —
automorphism pruning cannot change which witness is returned.

A :class:`DrawingCertificate` records base graph, crossing pairs (edge
index pairs, ascending), per-edge crossing orders (walking away from
the edge's smaller endpoint), plus the skeleton and one of its planar
rotation systems. ``verify_certificate`` re-derives everything from the
first three fields and never trusts the stored skeleton or embedding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial

import numpy as np

from ._geom import best_convex_placement, convex_drawing_data
from ._search import feasibility_search
from .errors import (BudgetExceeded, CertificateError, InputTooLarge,
                     InternalError, ParseError)
from .graphs import Graph, from_graph6, to_graph6
from .planarity import planar_embedding, validate_embedding

SOLVER_EDGE_CEILING = 21
_NO_BUDGET = 1 << 62


@dataclass(frozen=True)
class DrawingCertificate:
    """Witness that ``base`` can be drawn with ``len(crossings)`` crossings.

    crossings: edge-index pairs (i, j), i < j, strictly ascending, each
    pair of edges sharing no endpoint. edge_orders: one tuple per edge
    listing its crossings (as indices into ``crossings``) in order along
    the edge starting at the smaller-numbered endpoint. skeleton and
    embedding are the derived planarization and one planar rotation
    system for it; they are convenience copies, recomputable from the
    first three fields.
    """

    base: Graph
    crossings: tuple[tuple[int, int], ...]
    edge_orders: tuple[tuple[int, ...], ...]
    skeleton: Graph
    embedding: tuple

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def to_json(self) -> str:
        payload = {
            "base": to_graph6(self.base),
            "crossings": [list(p) for p in self.crossings],
            "orders": [list(o) for o in self.edge_orders],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "DrawingCertificate":
        try:
            payload = json.loads(text)
            base = from_graph6(payload["base"])
            crossings = tuple(tuple(int(x) for x in p)
                              for p in payload["crossings"])
            orders = tuple(tuple(int(x) for x in o)
                           for o in payload["orders"])
        except ParseError:
            raise
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed certificate text: {exc}") from exc
        return build_certificate(base, crossings, orders)


def _skeleton_edges(base: Graph, crossings, edge_orders):
    n = base.n
    out = []
    for i, (u, v) in enumerate(base.edges):
        prev = u
        for c in edge_orders[i]:
            out.append((prev, n + c))
            prev = n + c
        out.append((prev, v))
    return out


def build_certificate(base: Graph, crossings, edge_orders) -> DrawingCertificate:
    """Assemble and fully validate a certificate from its defining fields.

    Raises CertificateError on any structural violation or a nonplanar
    skeleton.
    """
    E = len(base.edges)
    crossings = tuple(tuple(int(x) for x in p) for p in crossings)
    edge_orders = tuple(tuple(int(x) for x in o) for o in edge_orders)
    for p in crossings:
        if len(p) != 2:
            raise CertificateError(f"crossing {p!r} is not an edge pair")
        i, j = p
        if not (0 <= i < j < E):
            raise CertificateError(f"bad edge index pair {p!r}")
        a, b = base.edges[i]
        c, d = base.edges[j]
        if len({a, b, c, d}) != 4:
            raise CertificateError(
                f"edges {i} and {j} share an endpoint and cannot cross")
    if any(crossings[t] >= crossings[t + 1] for t in range(len(crossings) - 1)):
        raise CertificateError("crossing pairs must be strictly ascending")
    if len(edge_orders) != E:
        raise CertificateError("edge_orders must list every edge")
    incident = [[] for _ in range(E)]
    for c, (i, j) in enumerate(crossings):
        incident[i].append(c)
        incident[j].append(c)
    for i in range(E):
        if sorted(edge_orders[i]) != incident[i]:
            raise CertificateError(
                f"order for edge {i} is not a permutation of its crossings")
    skeleton = Graph(base.n + len(crossings),
                     _skeleton_edges(base, crossings, edge_orders))
    embedding = planar_embedding(skeleton)
    if embedding is None:
        raise CertificateError("planarization skeleton is not planar")
    return DrawingCertificate(base, crossings, edge_orders, skeleton, embedding)


def verify_certificate(cert: DrawingCertificate) -> bool:
    """Re-derive the skeleton from scratch and check every invariant."""
    try:
        rebuilt = build_certificate(cert.base, cert.crossings, cert.edge_orders)
    except (CertificateError, ValueError, TypeError, IndexError):
        return False
    if rebuilt.skeleton != cert.skeleton:
        return False
    return validate_embedding(cert.skeleton, cert.embedding)


def crossing_number_lower_bound(g: Graph) -> int:
    """max of 0, the Euler bound, and the two cubic density bounds."""
    n, e = g.n, len(g.edges)
    best = 0
    if n >= 3:
        best = max(best, e - 3 * n + 6)
    if n > 0 and e > 4 * n:
        best = max(best, -(-e ** 3 // (64 * n * n)))
    if n > 0 and e > 7 * n:
        best = max(best, -(-e ** 3 // (29 * n * n)))
    return best


def _refined_lower_bound(g: Graph) -> int:
    # Euler bound sharpened by girth: planar with girth g forces
    # e <= g/(g-2) (n-2), and removing one edge per crossing planarizes.
    lb = crossing_number_lower_bound(g)
    gir = g.girth()
    if gir is not None and g.n >= 3:
        slack = len(g.edges) - Fraction(gir * (g.n - 2), gir - 2)
        lb = max(lb, ceil(slack))
    return lb


def _independent_pairs(edges):
    pairs = []
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a != c and a != d and b != c and b != d:
                pairs.append((i, j))
    return pairs


def _pair_permutations(g: Graph, pairs, max_count: int = 6000):
    """Automorphism action on candidate-pair indices, or None to skip pruning."""
    from ._canonical import automorphisms_kernel

    if g.n < 2 or not pairs:
        return None
    count, perms = automorphisms_kernel(g.adjacency_matrix(), max_count)
    if count <= 1:
        return None
    eidx = {e: i for i, e in enumerate(g.edges)}
    pidx = {p: t for t, p in enumerate(pairs)}
    rows = []
    for r in range(count):
        pv = perms[r]
        if all(pv[i] == i for i in range(g.n)):
            continue
        row = np.empty(len(pairs), np.int64)
        for t, (i, j) in enumerate(pairs):
            u, v = g.edges[i]
            a, b = g.edges[j]
            ei = eidx[tuple(sorted((int(pv[u]), int(pv[v]))))]
            ej = eidx[tuple(sorted((int(pv[a]), int(pv[b]))))]
            row[t] = pidx[(ei, ej) if ei < ej else (ej, ei)]
        rows.append(row)
    if not rows:
        return None
    return np.stack(rows)


def _decode_orders(E, pairs, subset, code):
    incident = [[] for _ in range(E)]
    for c, p in enumerate(subset):
        i, j = pairs[p]
        incident[i].append(c)
        incident[j].append(c)
    code = int(code)
    if code < 0:
        raise InternalError("negative order code from the search kernel")
    orders = []
    for i in range(E):
        lst = incident[i]
        if len(lst) < 2:
            orders.append(tuple(lst))
            continue
        f = factorial(len(lst))
        digit = code % f
        code //= f
        pool = list(lst)
        seq = []
        for t in range(len(lst)):
            fr = factorial(len(lst) - 1 - t)
            idx, digit = divmod(digit, fr)
            seq.append(pool.pop(idx))
        orders.append(tuple(seq))
    if code != 0:
        raise InternalError("order code longer than the edge incidences")
    return tuple(orders)


class _Part:
    """One connected component of the input, with its search state."""

    def __init__(self, verts, graph: Graph):
        self.verts = verts
        self.graph = graph
        self.lb = _refined_lower_bound(graph)
        pos, self.ub = best_convex_placement(graph)
        self.convex = convex_drawing_data(graph, pos)
        self.pairs = _independent_pairs(graph.edges)
        self.value = None
        self.crossings = None
        self.orders = None
        self.progress_lb = self.lb

    def solve(self, remaining) -> bool:
        g = self.graph
        ea = g.edge_array()
        eu = np.ascontiguousarray(ea[:, 0])
        ev = np.ascontiguousarray(ea[:, 1])
        pair_a = np.array([p[0] for p in self.pairs], np.int64)
        pair_b = np.array([p[1] for p in self.pairs], np.int64)
        perms = None
        if self.lb < self.ub:
            perms = _pair_permutations(g, self.pairs)
        if perms is None:
            perms = np.zeros((0, len(self.pairs)), np.int64)
        for k in range(self.lb, self.ub):
            self.progress_lb = k
            if remaining[0] <= 0:
                return False
            status, calls, subset, code = feasibility_search(
                g.n, eu, ev, pair_a, pair_b, perms, k, remaining[0])
            remaining[0] -= int(calls)
            if status == 3:
                raise InternalError("planarity kernel rejected a skeleton")
            if status == 2:
                return False
            if status == 1:
                chosen = [int(s) for s in subset[:k]]
                self.value = k
                self.crossings = tuple(self.pairs[p] for p in chosen)
                self.orders = _decode_orders(
                    len(g.edges), self.pairs, chosen, code)
                return True
        self.value = self.ub
        self.crossings, self.orders = self.convex
        self.progress_lb = self.ub
        return True

    def best_known(self):
        if self.value is not None:
            return self.crossings, self.orders
        return self.convex


def _combine_certificate(g: Graph, parts) -> DrawingCertificate:
    eidx = {e: i for i, e in enumerate(g.edges)}
    entries = []
    part_orders = []
    for pi, part in enumerate(parts):
        crossings, orders = part.best_known()
        gmap = [eidx[(part.verts[a], part.verts[b])]
                for a, b in part.graph.edges]
        for lc, (li, lj) in enumerate(crossings):
            entries.append(((gmap[li], gmap[lj]), pi, lc))
        part_orders.append((gmap, orders))
    entries.sort()
    lookup = {(pi, lc): gc for gc, (_, pi, lc) in enumerate(entries)}
    global_orders = [()] * len(g.edges)
    for pi, (gmap, orders) in enumerate(part_orders):
        for le, order in enumerate(orders):
            if order:
                global_orders[gmap[le]] = tuple(
                    lookup[(pi, lc)] for lc in order)
    crossings_g = tuple(pair for pair, _, _ in entries)
    return build_certificate(g, crossings_g, tuple(global_orders))


def crossing_number(g: Graph, budget: int | None = None):
    """Exact Cr(g) with a verifying certificate, as (count, certificate).

    Iterative deepening per connected component (crossing number is
    additive over components), pruned below by the refined Euler bound
    and capped above by a convex-placement witness. ``budget`` bounds
    the total number of planarity tests; exceeding it raises
    BudgetExceeded carrying sound bounds and the best witness so far.
    """
    if len(g.edges) > SOLVER_EDGE_CEILING:
        raise InputTooLarge(
            f"solver handles at most {SOLVER_EDGE_CEILING} edges, "
            f"got {len(g.edges)}")
    remaining = [int(budget) if budget is not None else _NO_BUDGET]
    parts = [_Part(verts, g.induced_subgraph(verts))
             for verts in g.connected_components()]
    for idx, part in enumerate(parts):
        if part.solve(remaining):
            continue
        done = sum(p.value for p in parts[:idx])
        lower = done + part.progress_lb + sum(p.lb for p in parts[idx + 1:])
        upper = done + sum(p.ub for p in parts[idx:])
        raise BudgetExceeded(
            f"planarity-test budget {budget} exhausted",
            lower_bound=lower, upper_bound=upper,
            certificate=_combine_certificate(g, parts))
    value = sum(p.value for p in parts)
    return value, _combine_certificate(g, parts)
