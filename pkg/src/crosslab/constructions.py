"""Executable forms of the two limit-lemma mechanisms.

Lower-bound side: sample vertex subsets of a drawn graph independently
and track how many vertices, edges, and drawing crossings survive, with
the exact expectations (pn, p^2 e, p^4 X) available symbolically next
to the Monte Carlo estimates, plus the two Chebyshev tail bounds the
argument leans on.

Upper-bound side: the drawing machine — split vertices until a degree
ceiling holds (rotation-consecutive blocks, so no crossing is touched),
clone every vertex L times at drawing level, and take K disjoint copies
— together with the crossing budget K * L^4 * (X + sum_v C(d(v), 2))
that the counted result is checked against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from ._blowup import clone_all
from .errors import (CertificateError, InputError, InternalError,
                     InvalidProbability)
from .graphs import Graph
from .planarity import planar_embedding, validate_embedding
from .solver import DrawingCertificate, build_certificate

_TRIAL_CHUNK = 4096


@dataclass(frozen=True)
class SampleStats:
    """Monte Carlo summary of random induced subsampling of a drawing."""

    p: float
    trials: int
    nu_mean: float
    eta_mean: float
    xi_mean: float
    nu_var: float
    eta_var: float
    xi_var: float
    seed: int

    def to_json(self) -> str:
        return json.dumps(
            {k: getattr(self, k) for k in
             ("p", "trials", "nu_mean", "eta_mean", "xi_mean",
              "nu_var", "eta_var", "xi_var", "seed")},
            sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class BlowupParams:
    """Degree ceiling t, clone multiplicity L, disjoint copy count K."""

    t: int
    L: int
    K: int

    def __post_init__(self):
        if self.t < 1 or self.L < 1 or self.K < 1:
            raise InputError("blow-up parameters must all be >= 1")


def _check_probability(p) -> float:
    p = float(p)
    if not 0 < p <= 1:
        raise InvalidProbability(f"inclusion probability {p} not in (0, 1]")
    return p


def sample_induced(c: DrawingCertificate, p, trials: int,
                   seed: int) -> SampleStats:
    """Keep each vertex with probability p, independently, `trials` times.

    Per trial: nu = surviving vertices, eta = edges with both ends kept,
    xi = certificate crossings whose four endvertices are all kept.
    The stream of random draws depends only on the seed (trials are
    consumed in order), so results are bit-reproducible.
    """
    p = _check_probability(p)
    if trials < 1:
        raise InputError("trials must be >= 1")
    g = c.base
    eu = np.array([e[0] for e in g.edges], np.int64)
    ev = np.array([e[1] for e in g.edges], np.int64)
    quads = np.array([g.edges[i] + g.edges[j] for i, j in c.crossings],
                     np.int64).reshape(-1, 4)
    rng = np.random.default_rng(seed)
    nu = np.empty(trials, np.int64)
    eta = np.empty(trials, np.int64)
    xi = np.empty(trials, np.int64)
    done = 0
    while done < trials:
        m = min(_TRIAL_CHUNK, trials - done)
        kept = rng.random((m, g.n)) < p
        sl = slice(done, done + m)
        nu[sl] = kept.sum(axis=1)
        if len(eu):
            eta[sl] = (kept[:, eu] & kept[:, ev]).sum(axis=1)
        else:
            eta[sl] = 0
        if len(quads):
            xi[sl] = kept[:, quads].all(axis=2).sum(axis=1)
        else:
            xi[sl] = 0
        done += m
    ddof = 1 if trials > 1 else 0
    return SampleStats(
        p=p, trials=trials, seed=seed,
        nu_mean=float(nu.mean()), eta_mean=float(eta.mean()),
        xi_mean=float(xi.mean()),
        nu_var=float(nu.var(ddof=ddof)), eta_var=float(eta.var(ddof=ddof)),
        xi_var=float(xi.var(ddof=ddof)))


def exact_expectations(c: DrawingCertificate, p):
    """(E[nu], E[eta], E[xi]) = (pn, p^2 e, p^4 X), exactly."""
    _check_probability(float(p))
    pf = Fraction(p)
    return (pf * c.base.n,
            pf ** 2 * len(c.base.edges),
            pf ** 4 * len(c.crossings))


def chebyshev_bounds(n: int, e: int, p, slack):
    """Tail bounds for relative deviation `slack` of nu and eta.

    Pr[|nu - pn| > slack*pn] <= 1/(slack^2 pn), from Var[nu] <= pn, and
    Pr[|eta - p^2 e| > slack*p^2 e] <= 2n/(slack^2 pe), from
    Var[eta] <= p^2 e + p^3 en <= 2 p^3 en (valid once pn > 1). Both
    returned exactly; values above 1 are vacuous but kept raw.
    """
    if n < 1 or e < 1:
        raise InputError("need n >= 1 and e >= 1")
    pf = Fraction(p)
    if not 0 < pf <= 1:
        raise InvalidProbability(f"inclusion probability {p} not in (0, 1]")
    s = Fraction(slack)
    if s <= 0:
        raise InputError("slack must be positive")
    return (1 / (s ** 2 * pf * n), 2 * n / (s ** 2 * pf * e))


def _first_hops(cert: DrawingCertificate):
    """For each edge, the skeleton vertex adjacent to each endpoint."""
    n = cert.base.n
    hops = []
    for i, (u, v) in enumerate(cert.base.edges):
        order = cert.edge_orders[i]
        if order:
            hops.append((n + order[0], n + order[-1]))
        else:
            hops.append((v, u))
    return hops


def _vertex_rotations(cert: DrawingCertificate, embedding):
    """Rotation at each base vertex as a tuple of incident edge indices."""
    hops = _first_hops(cert)
    owner = [dict() for _ in range(cert.base.n)]
    for i, (u, v) in enumerate(cert.base.edges):
        owner[u][hops[i][0]] = i
        owner[v][hops[i][1]] = i
    return tuple(tuple(owner[v][w] for w in embedding[v])
                 for v in range(cert.base.n))


def _split_cyclic(rot, a1, a2, b2):
    """Classify a dummy's 4-rotation: sign bit, or None if it is not a
    proper transversal order (the two a-entries must not be adjacent)."""
    pos = {x: k for k, x in enumerate(rot)}
    if abs(pos[a1] - pos[a2]) != 2:
        return None
    return rot[(pos[a1] + 1) % 4] == b2


def _forced_alternating_embedding(cert: DrawingCertificate, around):
    """Planar embedding of the skeleton that is transversal at every
    crossing, or None if no such embedding exists.

    Each degree-4 dummy is replaced by a wheel on four rim vertices.
    Wheels are 3-connected, so any planar embedding keeps the rim cycle
    order; attaching the two passing edges to opposite rim vertices
    therefore forces them to alternate around the crossing point.
    """
    n = cert.base.n
    m = len(cert.crossings)
    center = lambda c: n + 5 * c
    rim = lambda c, k: n + 5 * c + 1 + k
    # the four neighbors of a dummy are pairwise distinct vertices, so
    # a neighbor-keyed rim assignment is unambiguous
    rim_of = []
    for c in range(m):
        (a1, a2), (b1, b2) = around[(c, 0)], around[(c, 1)]
        rim_of.append({a1: 0, b1: 1, a2: 2, b2: 3})

    def image(x, other):
        if x < n:
            return x
        c = x - n
        return rim(c, rim_of[c][other])

    edges = []
    for x, y in cert.skeleton.edges:
        edges.append((image(x, y), image(y, x)))
    for c in range(m):
        r = [rim(c, k) for k in range(4)]
        edges += [(r[0], r[1]), (r[1], r[2]), (r[2], r[3]), (r[3], r[0])]
        edges += [(center(c), rk) for rk in r]
    emb_h = planar_embedding(Graph(n + 5 * m, edges, _skip_validation=True))
    if emb_h is None:
        return None

    def preimage(x):
        return x if x < n else n + (x - n) // 5

    rotation = [tuple(preimage(w) for w in emb_h[v]) for v in range(n)]
    for c in range(m):
        ring = []
        spokes = {rim(c, k): k for k in range(4)}
        neighbor = {v: k for k, v in rim_of[c].items()}
        for rv in emb_h[center(c)]:
            k = spokes[rv]
            ring.append(neighbor[k])
        rotation.append(tuple(ring))
    rotation = tuple(rotation)
    if not validate_embedding(cert.skeleton, rotation):
        raise InternalError("wheel-gadget embedding failed to map back")
    return rotation


def _dummy_contacts(cert: DrawingCertificate):
    """(crossing, side) -> the dummy's two skeleton neighbors along that
    side's edge, in walk order."""
    n = cert.base.n
    around = {}
    for i, order in enumerate(cert.edge_orders):
        u, v = cert.base.edges[i]
        walk = [u] + [n + c for c in order] + [v]
        for k, c in enumerate(order):
            around[(c, 0) if cert.crossings[c][0] == i else (c, 1)] = \
                (walk[k], walk[k + 2])
    return around


def _read_signs(cert, embedding, around):
    n = cert.base.n
    signs = []
    for c in range(len(cert.crossings)):
        a1, a2 = around[(c, 0)]
        b2 = around[(c, 1)][1]
        signs.append(_split_cyclic(embedding[n + c], a1, a2, b2))
    return signs


def _transversal_embedding(cert: DrawingCertificate):
    """An embedding of the skeleton realizing every listed crossing
    transversally: the stored one if it qualifies, else a repaired one,
    else None (the certificate is an upper-bound witness only — some
    listed crossing can exist in no drawing except as a touching point,
    e.g. a single crossing between two otherwise disjoint cycles)."""
    around = _dummy_contacts(cert)
    if None not in _read_signs(cert, cert.embedding, around):
        return cert.embedding
    return _forced_alternating_embedding(cert, around)


def _crossing_frame(cert: DrawingCertificate):
    """Rotations at base vertices plus one orientation bit per crossing.

    The bit says whether the higher-indexed edge enters the left of the
    lower-indexed one (both walked from their smaller endpoints), read
    off a transversal planar embedding of the skeleton.
    """
    emb = _transversal_embedding(cert)
    if emb is None:
        raise CertificateError(
            "certificate admits no drawing with transversal crossings")
    signs = _read_signs(cert, emb, _dummy_contacts(cert))
    return _vertex_rotations(cert, emb), signs


def split_to_max_degree(c: DrawingCertificate, t: int) -> DrawingCertificate:
    """Split vertices into rotation-consecutive blocks of degree <= t.

    Edge and crossing sets are untouched (each block keeps its stubs in
    a bundle, so no curve moves); vertex count grows by at most
    sum_v floor(d(v)/t). Blocks are read off a transversal embedding and
    the embedding is carried through every step — re-deriving one from
    the split skeleton could pick a rotation no actual drawing has (the
    split graph is sparser, so its skeleton embeds in more ways than the
    drawing supports, some of which strand a crossing between two
    otherwise disjoint cycles where it could only be a touching point).
    """
    if t < 1:
        raise InputError("degree ceiling must be >= 1")
    emb = _transversal_embedding(c)
    if emb is None:
        raise CertificateError(
            "certificate admits no drawing with transversal crossings")
    if emb is not c.embedding:
        c = DrawingCertificate(c.base, c.crossings, c.edge_orders,
                               c.skeleton, emb)
    while True:
        g = c.base
        v = next((w for w in range(g.n) if g.degree(w) > t), None)
        if v is None:
            return c
        c = _split_once(c, v, t)


def _split_once(cert: DrawingCertificate, v: int, t: int):
    """Split one vertex along its embedded rotation, preserving the
    drawing: new block vertices take ids n..n+k-2, dummies shift up
    (and re-sort, since crossing ids follow the new edge numbering)."""
    g = cert.base
    n, m = g.n, len(cert.crossings)
    rot = cert.embedding[v]                # skeleton neighbors, cyclic
    blocks = [rot[s:s + t] for s in range(0, len(rot), t)]
    k = len(blocks)
    n2 = n + k - 1

    owner = {}                             # v's skeleton neighbor -> block id
    for b, block in enumerate(blocks):
        vb = v if b == 0 else n + b - 1
        for w in block:
            owner[w] = vb

    def hop(i, end):
        # first skeleton vertex when leaving `end` along base edge i
        u, w = g.edges[i]
        order = cert.edge_orders[i]
        if not order:
            return w if end == u else u
        return n + (order[0] if end == u else order[-1])

    moved = []
    for i, (a, b) in enumerate(g.edges):
        if a == v:
            a = owner[hop(i, v)]
        elif b == v:
            b = owner[hop(i, v)]
        moved.append((a, b))
    new_base = Graph(n2, moved)
    if new_base.e != g.e:
        raise InternalError("vertex split changed the edge count")

    index = {e: j for j, e in enumerate(new_base.edges)}
    emap = [index[tuple(sorted(e))] for e in moved]
    entries = sorted(
        (tuple(sorted((emap[i], emap[j]))), c)
        for c, (i, j) in enumerate(cert.crossings))
    cmap = {old: new for new, (_, old) in enumerate(entries)}
    orders = [()] * new_base.e
    for i, order in enumerate(cert.edge_orders):
        a, b = moved[i]
        walk = order if a < b else tuple(reversed(order))
        orders[emap[i]] = tuple(cmap[c] for c in walk)

    def rename(s, w):
        # image of rotation entry w as seen from skeleton vertex s
        if w == v:
            return owner[s]
        return w if w < n else n2 + cmap[w - n]

    skeleton = Graph(n2 + m,
                     [(rename(y, x), rename(x, y))
                      for x, y in cert.skeleton.edges])
    emb_new = [None] * (n2 + m)
    for s in range(n + m):
        if s == v:
            continue
        s2 = s if s < n else n2 + cmap[s - n]
        emb_new[s2] = tuple(rename(s, w) for w in cert.embedding[s])
    for b, block in enumerate(blocks):
        vb = v if b == 0 else n + b - 1
        emb_new[vb] = tuple(rename(v, w) for w in block)
    embedding = tuple(emb_new)
    if not validate_embedding(skeleton, embedding):
        raise InternalError("vertex split broke the embedding")
    return DrawingCertificate(new_base,
                              tuple(pair for pair, _ in entries),
                              tuple(orders), skeleton, embedding)


def blow_up(c: DrawingCertificate, params: BlowupParams):
    """L-clone every vertex at drawing level, then take K disjoint copies.

    Returns (certificate, bound) with bound the drawing budget
    K * L^4 * (X + sum_v C(d(v), 2)). For L <= 2 the counted crossings
    stay within the budget; for higher multiplicities some
    bundle-internal crossings are unavoidable (the L-clone of a single
    edge contains K_{L,L}) and the count can pass it. Vertex ids:
    replica r holds the block r*L*n .. (r+1)*L*n - 1, with original
    vertex v at offset v and its clones at offsets
    n + v(L-1) .. n + v(L-1) + L - 2.
    """
    L, K = params.L, params.K
    g = c.base
    rotations, signs = _crossing_frame(c)
    st, _ = clone_all(g.n, g.edges, c.edge_orders, signs, rotations, L)

    block = L * g.n
    pairs = []
    orders = []
    for r in range(K):
        off = r * block
        for eid in range(st.next_edge):
            e = st.edges[eid]
            pairs.append(tuple(sorted((e.a + off, e.b + off))))
    big = Graph(K * block, pairs)
    index = {}
    for j, e in enumerate(big.edges):
        if e in index:
            raise InternalError("blow-up produced a duplicate edge")
        index[e] = j

    crossings = []
    for r in range(K):
        off = r * block
        for xid in range(st.next_event):
            e1, e2 = st.events[xid]
            i = _replica_index(st, index, e1, off)
            j = _replica_index(st, index, e2, off)
            crossings.append((tuple(sorted((i, j))), (r, xid)))
    crossings.sort()
    if any(crossings[k][0] == crossings[k + 1][0]
           for k in range(len(crossings) - 1)):
        raise InternalError("two edges of the blow-up cross twice")
    cmap = {key: pos for pos, (_, key) in enumerate(crossings)}

    big_orders = [()] * len(big.edges)
    for r in range(K):
        off = r * block
        for eid in range(st.next_edge):
            e = st.edges[eid]
            if not e.events:
                continue
            walk = e.events if e.a + off < e.b + off else reversed(e.events)
            big_orders[_replica_index(st, index, eid, off)] = \
                tuple(cmap[(r, x)] for x in walk)

    cert = build_certificate(big, tuple(p for p, _ in crossings),
                             tuple(big_orders))
    bound = K * L ** 4 * (len(c.crossings)
                          + sum(comb(d, 2) for d in g.degrees()))
    return cert, bound


def _replica_index(st, index, eid, off):
    e = st.edges[eid]
    return index[tuple(sorted((e.a + off, e.b + off)))]
