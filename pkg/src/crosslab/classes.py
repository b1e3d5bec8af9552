"""Graph-class descriptors and membership tests.

A :class:`ClassSpec` names a hereditary graph class from a fixed menu:

- ``all``                 : every simple graph
- ``bipartite``           : 2-colorable graphs
- ``l_colorable(l)``      : chromatic number at most l  (l >= 2)
- ``kt_free(t)``          : no K_t clique               (t >= 3)
- ``odd_girth_at_least(g)``: no odd cycle shorter than g (g odd, >= 3)
- ``intersection(...)``   : graphs in every member class

All of these contain an edge, and are closed under subgraphs, disjoint
unions and vertex cloning, which is what the operation algebra in
pst_ops.py relies on. Membership tests are exact (small-graph regime).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError
from .graphs import Graph, complete_bipartite

VALID_KINDS = ("all", "bipartite", "l_colorable", "kt_free",
               "odd_girth_at_least", "intersection")


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    param: int | None = None
    members: tuple["ClassSpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in VALID_KINDS:
            raise InputError(f"unknown class kind {self.kind!r}")
        if self.kind == "l_colorable":
            if self.param is None or self.param < 2:
                raise InputError("l_colorable requires l >= 2")
        elif self.kind == "kt_free":
            if self.param is None or self.param < 3:
                raise InputError("kt_free requires t >= 3")
        elif self.kind == "odd_girth_at_least":
            if self.param is None or self.param < 3 or self.param % 2 == 0:
                raise InputError("odd_girth_at_least requires odd g >= 3")
        elif self.kind == "intersection":
            if not self.members:
                raise InputError("intersection requires at least one member")
            if self.param is not None:
                raise InputError("intersection takes no numeric parameter")
        elif self.param is not None:
            raise InputError(f"class kind {self.kind!r} takes no parameter")

    def label(self) -> str:
        if self.kind == "intersection":
            return "intersection(" + ",".join(m.label() for m in self.members) + ")"
        if self.param is not None:
            return f"{self.kind}({self.param})"
        return self.kind

    def __str__(self) -> str:
        return self.label()


def all_graphs() -> ClassSpec:
    return ClassSpec("all")


def bipartite() -> ClassSpec:
    return ClassSpec("bipartite")


def l_colorable(l: int) -> ClassSpec:
    return ClassSpec("l_colorable", l)


def kt_free(t: int) -> ClassSpec:
    return ClassSpec("kt_free", t)


def odd_girth_at_least(g: int) -> ClassSpec:
    return ClassSpec("odd_girth_at_least", g)


def intersection(*specs: ClassSpec) -> ClassSpec:
    return ClassSpec("intersection", None, tuple(specs))


def parse_class_spec(text: str) -> ClassSpec:
    """Parse a CLI-style class label such as ``kt_free(4)`` or
    ``intersection(bipartite,kt_free(4))``."""
    s = text.strip()
    if s == "all":
        return all_graphs()
    if s == "bipartite":
        return bipartite()
    for kind in ("l_colorable", "kt_free", "odd_girth_at_least"):
        if s.startswith(kind + "(") and s.endswith(")"):
            inner = s[len(kind) + 1:-1]
            try:
                return ClassSpec(kind, int(inner))
            except ValueError as exc:
                raise InputError(f"bad parameter in {text!r}") from exc
    if s.startswith("intersection(") and s.endswith(")"):
        inner = s[len("intersection("):-1]
        parts, depth, start = [], 0, 0
        for i, c in enumerate(inner):
            if c == "(":
                depth += 1
            elif c == ")":
                depth -= 1
            elif c == "," and depth == 0:
                parts.append(inner[start:i])
                start = i + 1
        parts.append(inner[start:])
        return intersection(*(parse_class_spec(p) for p in parts if p.strip()))
    raise InputError(f"cannot parse class spec {text!r}")


# -- membership tests --------------------------------------------------------


def is_bipartite(g: Graph) -> bool:
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
                    return False
    return True


def chromatic_number_at_most(g: Graph, l: int) -> bool:
    """Exact test for chi(g) <= l via backtracking.

    Vertices are colored in descending-degree order; a fresh color is only
    opened when no used color fits, which bounds the branching enough for
    the small graphs this package works with.
    """
    if g.n == 0:
        return True
    if l >= g.n:
        return True
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    colors = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        forbidden = 0
        for w in g.neighbors(v):
            if colors[w] != -1:
                forbidden |= 1 << colors[w]
        limit = min(used + 1, l)
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return place(0, 0)


def has_clique(g: Graph, t: int) -> bool:
    """Exact K_t-subgraph test (t >= 1) by pivot-free backtracking."""
    if t <= 1:
        return g.n >= t
    if t == 2:
        return g.e > 0
    neigh = [set(g.neighbors(v)) for v in range(g.n)]

    def extend(candidates: list[int], need: int) -> bool:
        if need == 0:
            return True
        if len(candidates) < need:
            return False
        for i, v in enumerate(candidates):
            nxt = [w for w in candidates[i + 1:] if w in neigh[v]]
            if extend(nxt, need - 1):
                return True
        return False

    return extend(list(range(g.n)), t)


def odd_girth(g: Graph) -> int | None:
    """Length of the shortest odd cycle, or None if there is none.

    For each root, a BFS layering is scanned for edges joining vertices at
    equal-parity depths; the minimum closed odd walk found this way has the
    length of the shortest odd cycle.
    """
    best: int | None = None
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.neighbors(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for u, v in g.edges:
            if dist[u] != -1 and dist[v] != -1 and (dist[u] + dist[v]) % 2 == 0:
                length = dist[u] + dist[v] + 1
                if best is None or length < best:
                    best = length
    return best


def contains(spec: ClassSpec, g: Graph) -> bool:
    """Exact membership test for `g` in the class described by `spec`."""
    if spec.kind == "all":
        return True
    if spec.kind == "bipartite":
        return is_bipartite(g)
    if spec.kind == "l_colorable":
        return chromatic_number_at_most(g, spec.param)
    if spec.kind == "kt_free":
        return not has_clique(g, spec.param)
    if spec.kind == "odd_girth_at_least":
        og = odd_girth(g)
        return og is None or og >= spec.param
    if spec.kind == "intersection":
        return all(contains(m, g) for m in spec.members)
    raise InputError(f"unknown class kind {spec.kind!r}")


# -- extremal edge counts ----------------------------------------------------


def _turan_edges(n: int, r: int) -> int:
    """Edge count of the balanced complete r-partite graph on n vertices."""
    if r >= n:
        return n * (n - 1) // 2
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return n * (n - 1) // 2 - sum(s * (s - 1) // 2 for s in sizes)


def _forces_triangle_free(spec: ClassSpec) -> bool:
    if spec.kind == "bipartite":
        return True
    if spec.kind == "l_colorable":
        return spec.param == 2
    if spec.kind == "kt_free":
        return spec.param == 3
    if spec.kind == "odd_girth_at_least":
        return spec.param >= 5
    if spec.kind == "intersection":
        return any(_forces_triangle_free(m) for m in spec.members)
    return False


def _clique_cap(spec: ClassSpec) -> int | None:
    """Largest r such that a complete r-partite graph can be in the class,
    for classes that do not force triangle-freeness (None = unbounded)."""
    if spec.kind in ("all", "odd_girth_at_least"):
        return None
    if spec.kind == "l_colorable":
        return spec.param
    if spec.kind == "kt_free":
        return spec.param - 1
    if spec.kind == "intersection":
        caps = [_clique_cap(m) for m in spec.members]
        caps = [c for c in caps if c is not None]
        return min(caps) if caps else None
    return None


def max_edges(spec: ClassSpec, n: int) -> int:
    """Maximum edge count of an n-vertex graph in the class.

    Exact for every expressible spec: triangle-free-forcing classes top out
    at the balanced complete bipartite count (Mantel/Turan), and the
    remaining constraints are all satisfied by a balanced complete
    multipartite graph with the right part count, which attains the Turan
    bound for the binding constraint.
    """
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    if spec.kind == "bipartite" or _forces_triangle_free(spec):
        return (n * n) // 4
    cap = _clique_cap(spec)
    if cap is None:
        return n * (n - 1) // 2
    return _turan_edges(n, cap)


def extremal_graph(spec: ClassSpec, n: int) -> Graph:
    """An n-vertex member of the class attaining :func:`max_edges`."""
    if spec.kind == "bipartite" or _forces_triangle_free(spec):
        return complete_bipartite(n // 2, n - n // 2)
    cap = _clique_cap(spec)
    if cap is None:
        cap = n
    r = min(cap, max(n, 1))
    q, rem = divmod(n, r) if r else (0, 0)
    sizes = [q + 1] * rem + [q] * (r - rem) if r else []
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    part_of = [0] * n
    for i in range(len(sizes)):
        for v in range(bounds[i], bounds[i + 1]):
            part_of[v] = i
    edges = tuple((u, v) for u, v in combinations(range(n), 2)
                  if part_of[u] != part_of[v])
    return Graph(n, edges, _skip_validation=True)


def girth_floor(spec: ClassSpec) -> int:
    """A sound lower bound on the girth of every member (3 or 4).

    Triangle-free-forcing classes have girth at least 4 (forests count,
    vacuously); everything else gets the trivial floor 3. Used by the
    harness for class-aware Euler-style lower bounds.
    """
    return 4 if _forces_triangle_free(spec) else 3
