"""Drawing-level vertex cloning: the engine behind the blow-up operation.

Clones are introduced one at a time. The new clone sits in the
reference gap of the cloned vertex's rotation and sends out one edge
per distinct far endpoint among the current stubs (so after all steps
every original edge has grown into its full bundle of copies). Each new
edge exits the corner by sweeping over the stubs between its chosen
shore of the gap and the nearest stub with the same far endpoint, then
runs alongside that parent stub for the rest of the curve, inheriting
the parent's crossings in order. Stubs sharing a far endpoint are never
crossed — the sweep stops at the nearest one — which is exactly the set
of crossings a drawing certificate must exclude (shared endpoint).

The geometry behind the bookkeeping is a nest of concentric sweeps:
arcs leaving one clone over the same shore never cross each other, so
the arc that sweeps farther must run closer to the vertex, and on every
stub they both cross the longer arc's event lands nearer the vertex.
Each stub keeps its crossing events in order from its creation end,
with counters marking how many lie inside the corner zones at the two
ends (a clone's copies must not inherit the parent's own corner at the
cloned vertex: the sweep re-derives those crossings from the rotation).
Every crossing carries an orientation bit — whether the second edge
enters from the left of the first, both read along their stored
directions — which decides on which side of the parent's event an
inherited event lands in the partner's order. A new copy always sits
directly against its parent: anything already stacked there was swept
over at the corner, so the copy slips inside it. All of it assumes one
global handedness for the rotation lists; flipping it everywhere
mirrors the drawing, so either convention is valid, and the caller
re-checks the final planarization with the left-right test.
"""

from __future__ import annotations

from .errors import InternalError


class _Edge:
    __slots__ = ("a", "b", "events", "corner_a", "corner_b", "origin",
                 "parent")

    def __init__(self, a, b, origin, parent=-1):
        self.a = a          # creation-side endpoint; events read from here
        self.b = b
        self.events = []    # event ids in order along the curve from a
        self.corner_a = 0   # prefix of events lying in the corner at a
        self.corner_b = 0   # suffix of events lying in the corner at b
        self.origin = origin
        self.parent = parent


class _State:
    def __init__(self):
        self.edges = {}
        self.events = {}    # id -> (edge id, edge id)
        self.signs = {}     # id -> True iff e2 enters e1's left (a->b frames)
        self.next_edge = 0
        self.next_event = 0

    def new_edge(self, a, b, origin, parent=-1):
        eid = self.next_edge
        self.next_edge += 1
        self.edges[eid] = _Edge(a, b, origin, parent)
        return eid

    def new_event(self, e1, e2, sign):
        xid = self.next_event
        self.next_event += 1
        self.events[xid] = (e1, e2)
        self.signs[xid] = sign
        return xid

    def partner(self, xid, eid):
        e1, e2 = self.events[xid]
        return e2 if e1 == eid else e1

    def enters_left(self, xid, eid):
        """True iff the other edge of the event enters eid's left."""
        return self.signs[xid] if self.events[xid][0] == eid \
            else not self.signs[xid]


def _w_end_is_a(edge, wclones):
    if edge.a in wclones:
        return True
    if edge.b in wclones:
        return False
    raise InternalError("stub not incident to the cloned vertex")


def _sub_packs(st, R, wclones):
    """Contiguous runs of R sharing a far endpoint, in rotation order."""
    runs = []
    seen = {}
    for idx, eid in enumerate(R):
        e = st.edges[eid]
        far = e.b if _w_end_is_a(e, wclones) else e.a
        if far in seen:
            r = runs[seen[far]]
            if r[2] != idx - 1:
                raise InternalError("clone bundle tore apart in a rotation")
            runs[seen[far]] = (far, r[1], idx)
        else:
            seen[far] = len(runs)
            runs.append((far, idx, idx))
    return runs


def _clone_once(st, rotation, wclones, w, w_c):
    R = list(rotation[w])
    J = len(R)
    rot_inserts = []
    low_hits = {}   # stub id -> low-shore events laid on it this step

    for far, lo, hi in _sub_packs(st, R, wclones):
        low = lo <= J - 1 - hi
        parent_id = R[lo] if low else R[hi]
        parent = st.edges[parent_id]
        crossed = R[:lo] if low else R[hi + 1:][::-1]

        cid = st.new_edge(w_c, far, parent.origin, parent_id)
        copy = st.edges[cid]
        rot_inserts.append((lo if low else hi + 1, cid, low))

        # corner fan: one crossing per stub between the shore and the pack;
        # a longer low sweep passes inside shorter ones, so its events sit
        # nearer the vertex, while high sweeps stack the other way round
        for s_id in crossed:
            s = st.edges[s_id]
            at_a = _w_end_is_a(s, wclones)
            xid = st.new_event(cid, s_id, low == at_a)
            copy.events.append(xid)
            copy.corner_a += 1
            if low:
                k = low_hits.get(s_id, 0)
                low_hits[s_id] = k + 1
                pos = s.corner_a - k if at_a \
                    else len(s.events) - s.corner_b + k
            else:
                pos = s.corner_a if at_a else len(s.events) - s.corner_b
            s.events.insert(pos, xid)
            if at_a:
                s.corner_a += 1
            else:
                s.corner_b += 1

        # run parallel to the parent: inherit everything beyond its own
        # corner at w, landing each new event right against the parent's
        parent_fwd = _w_end_is_a(parent, wclones)
        if parent_fwd:
            inherited = parent.events[parent.corner_a:]
            copy.corner_b = parent.corner_b
        else:
            upto = len(parent.events) - parent.corner_b
            inherited = list(reversed(parent.events[:upto]))
            copy.corner_b = parent.corner_a

        for pxid in inherited:
            partner_id = st.partner(pxid, parent_id)
            partner = st.edges[partner_id]
            left = st.enters_left(pxid, parent_id) == parent_fwd
            xid = st.new_event(cid, partner_id, left)
            copy.events.append(xid)
            before = (not low) == left
            base = partner.events.index(pxid)
            if base < partner.corner_a:
                partner.corner_a += 1
            elif base >= len(partner.events) - partner.corner_b:
                partner.corner_b += 1
            partner.events.insert(base if before else base + 1, xid)

        # plug the copy into the far rotation, if that vertex is still live
        if far in rotation:
            rot = rotation[far]
            base = rot.index(parent_id)
            rot.insert(base + 1 if low else base, cid)

    # extend w's rotation so later clones sweep over this step's copies;
    # a new copy lands on the outside of its pack, on its approach side
    rot_w = rotation[w]
    for pos, cid, low in sorted(rot_inserts,
                                key=lambda t: (-t[0], not t[2])):
        rot_w.insert(pos, cid)


def clone_all(n, edges, edge_orders, signs, rotations, L):
    """L-clone every vertex of a drawn graph, tracking all crossings.

    Input: the drawing as edge list (lex-ordered pairs), per-edge
    crossing orders (crossing ids, walking from the smaller endpoint),
    per-crossing orientation bits (does the later edge enter the earlier
    one's left), and per-vertex rotations given as tuples of incident
    edge indices. Returns (state, clone_ids) where clone_ids[v] lists
    the graph's L vertex ids standing for v — v itself first, then the
    appended clones n + v(L-1) ... n + v(L-1) + L-2.
    """
    st = _State()
    eids = [st.new_edge(u, v, i) for i, (u, v) in enumerate(edges)]
    for c, (i, j) in enumerate(_event_pairs(edge_orders)):
        xid = st.new_event(eids[i], eids[j], signs[c])
        if xid != c:
            raise InternalError("event ids diverged from crossing ids")
    for i, order in enumerate(edge_orders):
        st.edges[eids[i]].events.extend(order)

    rotation = {v: [eids[i] for i in rotations[v]] for v in range(n)}
    clone_ids = {}
    next_vertex = n
    for w in range(n):
        wclones = {w}
        for _ in range(1, L):
            w_c = next_vertex
            next_vertex += 1
            _clone_once(st, rotation, wclones, w, w_c)
            wclones.add(w_c)
        clone_ids[w] = [w] + sorted(wclones - {w})
        del rotation[w]
    return st, clone_ids


def _event_pairs(edge_orders):
    """Crossing id -> (edge, edge) with the lower-indexed edge first."""
    first = {}
    pairs = {}
    for i, order in enumerate(edge_orders):
        for c in order:
            if c in first:
                pairs[c] = (first[c], i)
            else:
                first[c] = i
    if len(pairs) != len(first):
        raise InternalError("a crossing id appears on fewer than two edges")
    return [pairs[c] for c in sorted(pairs)]
