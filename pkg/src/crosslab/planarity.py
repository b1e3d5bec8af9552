"""Planarity predicates, embeddings, and an independent oracle.

Three code paths, kept deliberately separate:

- :func:`is_planar` runs the package's own left-right kernel (_lr.py),
  the path the crossing solver hammers.
- :func:`planar_embedding` asks networkx for a combinatorial embedding
  (rotation system) when one is needed for certificates and drawings.
- :func:`exhaustive_is_planar` searches all rotation systems for a
  genus-0 one; exponential, but an oracle that shares nothing with the
  left-right logic.

An embedding here is a tuple indexed by vertex holding the cyclic
(clockwise) neighbor order.
"""

from __future__ import annotations

import numpy as np

from ._lr import lr_planar_status, rotation_planar
from .errors import BudgetExceeded, InputError, InternalError
from .graphs import Graph

Rotation = tuple[tuple[int, ...], ...]


def is_planar(g: Graph) -> bool:
    arr = g.edge_array()
    status = lr_planar_status(g.n, arr[:, 0].copy(), arr[:, 1].copy())
    if status == 2:
        raise InternalError("left-right kernel reached an impossible state")
    return status == 1


def to_networkx(g: Graph):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def planar_embedding(g: Graph) -> Rotation | None:
    """Clockwise rotation system of a planar embedding, or None.

    Deterministic for a given graph: the underlying structures are built
    in sorted vertex/edge order.
    """
    import networkx as nx

    ok, emb = nx.check_planarity(to_networkx(g), counterexample=False)
    if not ok:
        return None
    data = emb.get_data()
    return tuple(tuple(data.get(v, ())) for v in range(g.n))


def face_count(g: Graph, rotation: Rotation) -> int:
    """Number of faces traced by the rotation system, component by
    component; components without edges contribute their single face."""
    comps = g.connected_components()
    pos = [{} for _ in range(g.n)]
    for v in range(g.n):
        for i, w in enumerate(rotation[v]):
            pos[v][w] = i
    visited = set()
    faces = 0
    for comp in comps:
        comp_edges = [(u, v) for u, v in g.edges if u in set(comp)]
        if not comp_edges:
            faces += 1
            continue
        half = [(u, v) for u, v in comp_edges] + [(v, u) for u, v in comp_edges]
        for start in half:
            if start in visited:
                continue
            faces += 1
            cur = start
            while cur not in visited:
                visited.add(cur)
                u, v = cur
                i = pos[v][u]
                w = rotation[v][(i + 1) % len(rotation[v])]
                cur = (v, w)
    return faces


def validate_embedding(g: Graph, rotation: Rotation) -> bool:
    """True iff `rotation` is a rotation system of a planar embedding of g:
    a neighbor permutation at every vertex whose face count satisfies
    Euler's formula on every component."""
    if len(rotation) != g.n:
        return False
    for v in range(g.n):
        if tuple(sorted(rotation[v])) != g.neighbors(v):
            return False
    total = 0
    for comp in g.connected_components():
        cset = set(comp)
        ec = sum(1 for u, v in g.edges if u in cset)
        sub = g.induced_subgraph(comp)
        relabel = {old: new for new, old in enumerate(comp)}
        sub_rot = tuple(tuple(relabel[w] for w in rotation[old])
                        for old in comp)
        fc = face_count(sub, sub_rot)
        if len(comp) - ec + fc != 2:
            return False
        total += fc
    return True


def exhaustive_is_planar(g: Graph, max_states: int = 50_000_000) -> bool:
    """Rotation-system search oracle. Exponential in Sum (deg-1)!; use on
    small graphs only. Raises BudgetExceeded when the state cap trips."""
    if max_states <= 0:
        raise InputError("max_states must be positive")
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        arr = sub.edge_array()
        res = rotation_planar(sub.n, arr[:, 0].copy(), arr[:, 1].copy(),
                              max_states)
        if res == -1:
            raise BudgetExceeded(
                f"rotation search exceeded {max_states} states on a "
                f"component with {sub.n} vertices")
        if res == 0:
            return False
    return True
