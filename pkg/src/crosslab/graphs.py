"""Immutable simple-graph type, graph6 codec, and named constructors.

Vertices are always 0..n-1. Edges are stored as a sorted tuple of (u, v)
pairs with u < v, so two equal graphs compare and hash equal and every
derived artifact (enumeration order, solver output, serialized payloads)
is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import InputError, ParseError, VertexNotFound


def _normalize_edges(n: int, edges) -> tuple[tuple[int, int], ...]:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise InputError(f"self-loop at vertex {u} not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexNotFound(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        out.add((u, v) if u < v else (v, u))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    _skip_validation: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if self._skip_validation:
            # caller guarantees clean (u, v) pairs; lex order is still
            # part of the contract (edge indices are stable identity)
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        else:
            object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    # -- basic accessors ---------------------------------------------------

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adjacency)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adjacency[u]

    def _check_vertex(self, v: int):
        if not (0 <= v < self.n):
            raise VertexNotFound(f"vertex {v} not in graph on {self.n} vertices")

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges:
            m[u, v] = 1
            m[v, u] = 1
        return m

    def edge_array(self) -> np.ndarray:
        """Edges as an (e, 2) int64 array (empty graphs give shape (0, 2))."""
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64)

    # -- derived graphs ----------------------------------------------------

    def add_edges(self, new_edges) -> "Graph":
        return Graph(self.n, self.edges + tuple(new_edges))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InputError(f"edge ({u},{v}) not present")
        key = (u, v) if u < v else (v, u)
        return Graph(self.n, tuple(e for e in self.edges if e != key),
                     _skip_validation=True)

    def complement(self) -> "Graph":
        present = set(self.edges)
        comp = tuple(p for p in combinations(range(self.n), 2) if p not in present)
        return Graph(self.n, comp, _skip_validation=True)

    def relabel(self, mapping) -> "Graph":
        """Apply a vertex bijection given as a sequence: new_id = mapping[old_id]."""
        perm = [int(mapping[v]) for v in range(self.n)]
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling is not a bijection on 0..n-1")
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def induced_subgraph(self, vertices) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in the sorted order of `vertices`."""
        vs = sorted(set(int(v) for v in vertices))
        for v in vs:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(vs)}
        keep = tuple((index[u], index[v]) for u, v in self.edges
                     if u in index and v in index)
        return Graph(len(vs), keep, _skip_validation=True)

    def connected_components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def girth(self) -> int | None:
        """Length of the shortest cycle, or None for forests.

        BFS from every root; a non-tree edge seen at depths d1, d2 closes a
        cycle of length d1 + d2 + 1, and the minimum over all roots and
        edges is exact.
        """
        best: int | None = None
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = [s]
            head = 0
            while head < len(queue):
                v = queue[head]
                head += 1
                for w in self._adjacency[v]:
                    if dist[w] == -1:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif parent[v] != w:
                        length = dist[v] + dist[w] + 1
                        if best is None or length < best:
                            best = length
        return best

    # -- serialization -----------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


# -- graph6 codec ----------------------------------------------------------
#
# Standard graph6 ASCII format: N(n) header then the upper triangle of the
# adjacency matrix in column order (x[k] for (i, j), i < j, ordered by j then
# i), packed big-endian into 6-bit groups, each group + 63.

_G6_HEADERS = (">>graph6<<",)


def _g6_encode_n(n: int) -> bytes:
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise InputError("graph too large for this graph6 encoder")


def to_graph6(g: Graph) -> str:
    bits = []
    adj = set(g.edges)
    for j in range(g.n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    data = bytearray(_g6_encode_n(g.n))
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = (group << 1) | b
        data.append(group + 63)
    return data.decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    for header in _G6_HEADERS:
        if s.startswith(header):
            s = s[len(header):]
    if not s:
        raise ParseError("empty graph6 string")
    raw = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in raw):
        raise ParseError(f"invalid graph6 characters in {s!r}")
    if raw[0] == 126:
        if len(raw) < 4:
            raise ParseError("truncated graph6 vertex count")
        if raw[1] == 126:
            raise ParseError("graph6 strings beyond 258047 vertices unsupported")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 body length {len(body)} does not match n={n}")
    bits = []
    for c in body:
        group = c - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges), _skip_validation=True)


# -- named constructors ------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)), _skip_validation=True)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise InputError("part sizes must be nonnegative")
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges, _skip_validation=True)


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), _skip_validation=True)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycles need at least 3 vertices")
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),)
    return Graph(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, g.edges + shifted, _skip_validation=True)
