"""Operations the class lattice is closed under: clone, split, subgraph, union.

Also the greedy bipartite-subgraph step (at least half the edges survive)
and an executable closure checker that replays a recorded operation and
re-tests class membership, so closure failures are reproducible.

Vertex naming: ``v`` keeps its id and stands in for the first clone or
the first split block; the other new vertices are appended after the old
ones as n, n+1, ..., so m = 1 is the exact identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import ClassSpec, contains
from .errors import InputError, InvalidPlan, PreconditionFailed, VertexNotFound
from .graphs import Graph
from .graphs import disjoint_union as _pairwise_union


@dataclass(frozen=True)
class SplitPlan:
    """Partition of N(v) into non-empty blocks, one per replacement vertex."""

    vertex: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts",
                           tuple(tuple(sorted(int(x) for x in p))
                                 for p in self.parts))

    def validate(self, g: Graph) -> None:
        if not (0 <= self.vertex < g.n):
            raise VertexNotFound(f"vertex {self.vertex} not in graph")
        seen: set[int] = set()
        for block in self.parts:
            if not block:
                raise InvalidPlan("empty block in split plan")
            if seen & set(block):
                raise InvalidPlan("split blocks overlap")
            seen.update(block)
        if seen != set(g.neighbors(self.vertex)):
            raise InvalidPlan(
                f"blocks do not partition the neighborhood of {self.vertex}")


def clone_vertex(g: Graph, v: int, m: int) -> Graph:
    """Replace v by m pairwise non-adjacent vertices sharing N(v)."""
    if not (0 <= v < g.n):
        raise VertexNotFound(f"vertex {v} not in graph")
    if m < 1:
        raise InputError("clone count must be >= 1")
    nb = g.neighbors(v)
    edges = list(g.edges)
    for i in range(m - 1):
        c = g.n + i
        edges.extend((w, c) if w < c else (c, w) for w in nb)
    return Graph(g.n + m - 1, edges, _skip_validation=True)


def split_vertex(g: Graph, plan: SplitPlan) -> Graph:
    """Replace v by one vertex per plan block, wired to that block only."""
    plan.validate(g)
    v = plan.vertex
    if not plan.parts:  # degree-0 vertex, empty partition: identity
        return g
    owner = {}
    for b, block in enumerate(plan.parts):
        vb = v if b == 0 else g.n + b - 1
        for w in block:
            owner[w] = vb
    edges = []
    for a, b in g.edges:
        if a == v:
            a = owner[b]
        elif b == v:
            b = owner[a]
        edges.append((a, b) if a < b else (b, a))
    return Graph(g.n + len(plan.parts) - 1, edges, _skip_validation=True)


def disjoint_union(gs) -> Graph:
    """Disjoint union of a non-empty list of graphs."""
    gs = list(gs)
    if not gs:
        raise InputError("need at least one graph")
    out = gs[0]
    for g in gs[1:]:
        out = _pairwise_union(out, g)
    return out


def bipartite_subgraph(g: Graph) -> Graph:
    """Spanning bipartite subgraph keeping at least ceil(e/2) edges.

    Greedy placement in vertex order followed by local switching: move
    any vertex with more same-side than cross-side neighbors. At a local
    optimum every vertex has cross-degree >= same-side degree, so the
    cut carries at least half of all edges. Deterministic.
    """
    side = [-1] * g.n
    for v in range(g.n):
        cross = sum(1 for w in g.neighbors(v) if side[w] == 0)
        same = sum(1 for w in g.neighbors(v) if side[w] == 1)
        side[v] = 1 if cross >= same else 0
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            within = sum(1 for w in g.neighbors(v) if side[w] == side[v])
            across = len(g.neighbors(v)) - within
            if within > across:
                side[v] = 1 - side[v]
                moved = True
    return Graph(g.n, tuple(e for e in g.edges if side[e[0]] != side[e[1]]),
                 _skip_validation=True)


def merge_clones(g: Graph, clones) -> Graph:
    """Contract a set of pairwise non-adjacent same-neighborhood vertices.

    Inverse of clone_vertex up to isomorphism; the survivor is the
    smallest id, the rest are deleted.
    """
    cs = sorted(set(int(v) for v in clones))
    if not cs:
        raise InputError("need at least one vertex to merge")
    for v in cs:
        if not (0 <= v < g.n):
            raise VertexNotFound(f"vertex {v} not in graph")
    keep = [v for v in range(g.n) if v not in cs[1:]]
    index = {v: i for i, v in enumerate(keep)}
    target = index[cs[0]]
    edges = set()
    drop = set(cs[1:])
    for u, v in g.edges:
        a = target if u in drop else index[u]
        b = target if v in drop else index[v]
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph(len(keep), tuple(edges))


def apply_trace(g: Graph, trace) -> Graph:
    """Replay one recorded operation: ("clone", v, m), ("split", v, blocks),
    ("subgraph", vertices, edges_in_original_labels), or ("union", other)."""
    kind = trace[0]
    if kind == "clone":
        return clone_vertex(g, trace[1], trace[2])
    if kind == "split":
        return split_vertex(g, SplitPlan(trace[1], tuple(trace[2])))
    if kind == "subgraph":
        vertices = sorted(set(int(v) for v in trace[1]))
        sub = g.induced_subgraph(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        present = set(sub.edges)
        keep = set()
        for u, v in trace[2]:
            u, v = int(u), int(v)
            if u not in index or v not in index:
                raise InputError(
                    f"({u},{v}) has an endpoint outside the kept vertices")
            a, b = index[u], index[v]
            key = (a, b) if a < b else (b, a)
            if key not in present:
                raise InputError(f"({u},{v}) is not an induced edge")
            keep.add(key)
        return Graph(sub.n, tuple(keep))
    if kind == "union":
        return disjoint_union([g, trace[1]])
    raise InputError(f"unknown operation kind {kind!r}")


def closure_check(spec: ClassSpec, g: Graph, trace) -> bool:
    """Replay `trace` on a class member and re-test membership."""
    if not contains(spec, g):
        raise PreconditionFailed(f"graph is not in {spec}")
    if trace[0] == "union" and not contains(spec, trace[1]):
        raise PreconditionFailed(f"union partner is not in {spec}")
    return contains(spec, apply_trace(g, trace))
