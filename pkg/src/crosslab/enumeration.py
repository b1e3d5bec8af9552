"""Isomorphism utilities and per-class graph enumeration.

Enumeration proceeds by breadth over edge counts: the level of graphs with
e + 1 edges comes from extending every level-e graph with every admissible
non-edge and deduplicating by canonical key. Every class here is closed
under edge deletion, so nothing is missed. Levels are cached per (class,
vertex count), and dense levels for the unrestricted class go through
complements instead.

Supported sizes: 8 vertices for the unrestricted and filtered classes,
10 for bipartite. Beyond that :class:`CeilingExceeded` is raised.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ._canonical import automorphisms_kernel, canonical_key_kernel
from .classes import ClassSpec, contains, max_edges
from .errors import BudgetExceeded, CeilingExceeded, InputError
from .graphs import Graph

CEILING_ALL = 8
CEILING_BIPARTITE = 10
CANONICAL_MAX_N = 11


def canonical_key(g: Graph) -> int:
    """Isomorphism-invariant integer key (n <= 11)."""
    if g.n > CANONICAL_MAX_N:
        raise InputError(
            f"canonical keys support up to {CANONICAL_MAX_N} vertices, "
            f"got {g.n}")
    return int(canonical_key_kernel(g.adjacency_matrix()))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e:
        return False
    return canonical_key(g) == canonical_key(h)


def automorphism_group(g: Graph, max_count: int = 100_000) -> list[tuple[int, ...]]:
    """All automorphisms of g as vertex-image tuples; identity included.

    Raises BudgetExceeded if the group is larger than max_count.
    """
    if g.n == 0:
        return [()]
    count, perms = automorphisms_kernel(g.adjacency_matrix(), max_count)
    if count == -1:
        raise BudgetExceeded(
            f"automorphism group larger than {max_count}")
    return [tuple(int(x) for x in perms[i]) for i in range(count)]


def _vertex_ceiling(spec: ClassSpec) -> int:
    return CEILING_BIPARTITE if spec.kind == "bipartite" else CEILING_ALL


def _bipartite_extension_sides(g: Graph) -> list[int] | None:
    """A proper 2-coloring per component, or None if g is not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


_level_cache: dict[tuple[ClassSpec, int], list[dict[int, Graph]]] = {}


def _levels(spec: ClassSpec, n: int) -> list[dict[int, Graph]]:
    key = (spec, n)
    if key not in _level_cache:
        empty = Graph(n, ())
        _level_cache[key] = [{canonical_key(empty): empty}]
    return _level_cache[key]


def _extend_level(spec: ClassSpec, level: dict[int, Graph]) -> dict[int, Graph]:
    out: dict[int, Graph] = {}
    bip = spec.kind == "bipartite"
    for g in level.values():
        present = set(g.edges)
        coloring = _bipartite_extension_sides(g) if bip else None
        comp_id = [0] * g.n
        if bip:
            for ci, comp in enumerate(g.connected_components()):
                for v in comp:
                    comp_id[v] = ci
        for u, v in combinations(range(g.n), 2):
            if (u, v) in present:
                continue
            if bip:
                if comp_id[u] == comp_id[v] and coloring[u] == coloring[v]:
                    continue
            cand = Graph(g.n, g.edges + ((u, v),), _skip_validation=True)
            if not bip and spec.kind != "all" and not contains(spec, cand):
                continue
            ck = canonical_key(cand)
            if ck not in out:
                out[ck] = cand
    return out


def enumerate_graphs(spec: ClassSpec, n: int, e: int) -> tuple[Graph, ...]:
    """Every isomorphism class in the class with exactly n vertices and e
    edges, each exactly once, in deterministic (canonical key) order."""
    if n < 0 or e < 0:
        raise InputError("n and e must be nonnegative")
    ceiling = _vertex_ceiling(spec)
    if n > ceiling:
        raise CeilingExceeded(
            f"enumeration for class {spec.label()} supports at most "
            f"{ceiling} vertices, got {n}")
    if e > max_edges(spec, n):
        return ()
    total = n * (n - 1) // 2
    if spec.kind == "all" and e > total // 2:
        # dense levels via complements
        flipped = enumerate_graphs(spec, n, total - e)
        pairs = sorted((canonical_key(h), h) for h in
                       (g.complement() for g in flipped))
        return tuple(h for _, h in pairs)
    levels = _levels(spec, n)
    while len(levels) <= e:
        nxt = _extend_level(spec, levels[-1])
        if not nxt:
            levels.append({})
            break
        levels.append(nxt)
    if e >= len(levels):
        return ()
    level = levels[e]
    return tuple(level[k] for k in sorted(level))


def count_graphs(spec: ClassSpec, n: int, e: int) -> int:
    return len(enumerate_graphs(spec, n, e))
