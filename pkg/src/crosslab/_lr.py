"""Left-right planarity kernel and an exhaustive rotation-system oracle.

Both functions are array-based so they can be numba-compiled; they sit in
the solver's innermost loop. Directed edge m of an undirected edge list
gets ids 2m (u -> v) and 2m + 1 (v -> u); ``d ^ 1`` is the reversal.

The left-right test follows the classic conflict-pair formulation: a DFS
orientation computes lowpoints and a nesting order, then a second DFS
maintains a stack of conflict pairs of intervals of return edges. The
conflict-pair stack is held in parallel int64 arrays; "no edge" is -1.
Object identity of stack entries (used by the reference formulation for
its stack-bottom markers) is replaced by monotone serial numbers that
survive pop-trim-push cycles. Only the verdict is computed; callers that
need an embedding go through the slower rotation-system path.

Status codes: 1 planar, 0 not planar, 2 internal invariant failure
(never expected; the wrapper raises on it rather than guessing).
"""

from __future__ import annotations

import numpy as np

from ._accel import optional_njit


@optional_njit(cache=True, nogil=True)
def _csr_from_edges(n, eu, ev):
    e = eu.shape[0]
    src = np.empty(2 * e, np.int64)
    dst = np.empty(2 * e, np.int64)
    for m in range(e):
        src[2 * m] = eu[m]
        dst[2 * m] = ev[m]
        src[2 * m + 1] = ev[m]
        dst[2 * m + 1] = eu[m]
    adj_start = np.zeros(n + 1, np.int64)
    for d in range(2 * e):
        adj_start[src[d] + 1] += 1
    for v in range(n):
        adj_start[v + 1] += adj_start[v]
    cursor = adj_start[:n].copy()
    adj_out = np.empty(2 * e, np.int64)
    for d in range(2 * e):
        v = src[d]
        adj_out[cursor[v]] = d
        cursor[v] += 1
    return src, dst, adj_start, adj_out


@optional_njit(cache=True, nogil=True)
def _add_constraints(ei, pe, lowpt, lowpt_edge, ref, stack_bottom,
                     S_Ll, S_Lh, S_Rl, S_Rh, S_id, ssp, serial):
    PLl = np.int64(-1)
    PLh = np.int64(-1)
    PRl = np.int64(-1)
    PRh = np.int64(-1)
    # merge return edges of ei into P.right
    while True:
        if ssp == 0:
            return 2, ssp, serial
        ssp -= 1
        QLl = S_Ll[ssp]
        QLh = S_Lh[ssp]
        QRl = S_Rl[ssp]
        QRh = S_Rh[ssp]
        if QLl != -1 or QLh != -1:
            t = QLl
            QLl = QRl
            QRl = t
            t = QLh
            QLh = QRh
            QRh = t
        if QLl != -1 or QLh != -1:
            return 0, ssp, serial
        if QRl == -1:
            return 2, ssp, serial
        if lowpt[QRl] > lowpt[pe]:
            # interval stays constrained; chain it onto P.right
            if PRl == -1 and PRh == -1:
                PRh = QRh
            else:
                ref[PRl] = QRh
            PRl = QRl
        else:
            # aligned with the parent edge; drop from the stack
            ref[QRl] = lowpt_edge[pe]
        top = S_id[ssp - 1] if ssp > 0 else np.int64(-1)
        if top == stack_bottom[ei]:
            break
    # merge conflicting return edges of earlier siblings into P.left
    while ssp > 0:
        tLl = S_Ll[ssp - 1]
        tLh = S_Lh[ssp - 1]
        tRl = S_Rl[ssp - 1]
        tRh = S_Rh[ssp - 1]
        confl_left = tLh != -1 and lowpt[tLh] > lowpt[ei]
        confl_right = tRh != -1 and lowpt[tRh] > lowpt[ei]
        if not (confl_left or confl_right):
            break
        ssp -= 1
        QLl = tLl
        QLh = tLh
        QRl = tRl
        QRh = tRh
        if confl_right:
            t = QLl
            QLl = QRl
            QRl = t
            t = QLh
            QLh = QRh
            QRh = t
        if QRh != -1 and lowpt[QRh] > lowpt[ei]:
            return 0, ssp, serial
        # interval below lowpt(ei) joins P.right
        if PRl != -1:
            ref[PRl] = QRh
        if QRl != -1:
            PRl = QRl
        if PLl == -1 and PLh == -1:
            PLh = QLh
        else:
            if PLl != -1:
                ref[PLl] = QLh
        PLl = QLl
    if not (PLl == -1 and PLh == -1 and PRl == -1 and PRh == -1):
        S_Ll[ssp] = PLl
        S_Lh[ssp] = PLh
        S_Rl[ssp] = PRl
        S_Rh[ssp] = PRh
        S_id[ssp] = serial
        serial += 1
        ssp += 1
    return 1, ssp, serial


@optional_njit(cache=True, nogil=True)
def _remove_back_edges(pe, src, dst, height, lowpt, ref,
                       S_Ll, S_Lh, S_Rl, S_Rh, S_id, ssp):
    u = src[pe]
    hu = height[u]
    # drop whole conflict pairs whose lowest return point is u
    while ssp > 0:
        ll = S_Ll[ssp - 1]
        lh = S_Lh[ssp - 1]
        rl = S_Rl[ssp - 1]
        if ll == -1 and lh == -1:
            low = lowpt[rl]
        elif rl == -1:
            low = lowpt[ll]
        else:
            low = min(lowpt[ll], lowpt[rl])
        if low != hu:
            break
        ssp -= 1
    if ssp > 0:
        # trim return edges to u off the topmost remaining pair in place,
        # keeping its serial so stack-bottom markers still match it
        ssp -= 1
        sid = S_id[ssp]
        PLl = S_Ll[ssp]
        PLh = S_Lh[ssp]
        PRl = S_Rl[ssp]
        PRh = S_Rh[ssp]
        while PLh != -1 and dst[PLh] == u:
            PLh = ref[PLh]
        if PLh == -1 and PLl != -1:
            ref[PLl] = PRl
            PLl = -1
        while PRh != -1 and dst[PRh] == u:
            PRh = ref[PRh]
        if PRh == -1 and PRl != -1:
            ref[PRl] = PLl
            PRl = -1
        S_Ll[ssp] = PLl
        S_Lh[ssp] = PLh
        S_Rl[ssp] = PRl
        S_Rh[ssp] = PRh
        S_id[ssp] = sid
        ssp += 1
    if lowpt[pe] < hu and ssp > 0:
        # ref of the parent edge points at a highest surviving return edge
        hl = S_Lh[ssp - 1]
        hr = S_Rh[ssp - 1]
        if hl != -1 and (hr == -1 or lowpt[hl] > lowpt[hr]):
            ref[pe] = hl
        else:
            ref[pe] = hr
    return ssp


@optional_njit(cache=True, nogil=True)
def _integrate(v, pe, ei, height, lowpt, lowpt_edge, ref, stack_bottom,
               ord_start, ord_list, S_Ll, S_Lh, S_Rl, S_Rh, S_id,
               ssp, serial):
    if lowpt[ei] < height[v]:
        if ei == ord_list[ord_start[v]]:
            lowpt_edge[pe] = lowpt_edge[ei]
        else:
            return _add_constraints(ei, pe, lowpt, lowpt_edge, ref,
                                    stack_bottom, S_Ll, S_Lh, S_Rl, S_Rh,
                                    S_id, ssp, serial)
    return 1, ssp, serial


@optional_njit(cache=True, nogil=True)
def lr_planar_status(n, eu, ev):
    e = eu.shape[0]
    if n > 2 and e > 3 * n - 6:
        return 0
    if e == 0 or n <= 2:
        return 1
    src, dst, adj_start, adj_out = _csr_from_edges(n, eu, ev)
    ne2 = 2 * e

    height = np.full(n, -1, np.int64)
    parent_edge = np.full(n, -1, np.int64)
    oriented = np.zeros(ne2, np.uint8)
    lowpt = np.zeros(ne2, np.int64)
    lowpt2 = np.zeros(ne2, np.int64)
    nesting = np.zeros(ne2, np.int64)
    ptr = np.zeros(n, np.int64)
    vstack = np.empty(n + 1, np.int64)

    # phase 1: DFS orientation, lowpoints, nesting order
    for root in range(n):
        if height[root] != -1:
            continue
        height[root] = 0
        sp = 0
        vstack[sp] = root
        sp += 1
        ptr[root] = adj_start[root]
        while sp > 0:
            v = vstack[sp - 1]
            advanced = False
            while ptr[v] < adj_start[v + 1]:
                d = adj_out[ptr[v]]
                ptr[v] += 1
                if oriented[d] == 1 or oriented[d ^ 1] == 1:
                    continue
                w = dst[d]
                oriented[d] = 1
                lowpt[d] = height[v]
                lowpt2[d] = height[v]
                if height[w] == -1:
                    parent_edge[w] = d
                    height[w] = height[v] + 1
                    ptr[w] = adj_start[w]
                    vstack[sp] = w
                    sp += 1
                    advanced = True
                    break
                # back edge: final lowpoint known immediately
                lowpt[d] = height[w]
                nesting[d] = 2 * lowpt[d]
                if lowpt2[d] < height[v]:
                    nesting[d] += 1
                pe = parent_edge[v]
                if pe != -1:
                    if lowpt[d] < lowpt[pe]:
                        lowpt2[pe] = min(lowpt[pe], lowpt2[d])
                        lowpt[pe] = lowpt[d]
                    elif lowpt[d] > lowpt[pe]:
                        lowpt2[pe] = min(lowpt2[pe], lowpt[d])
                    else:
                        lowpt2[pe] = min(lowpt2[pe], lowpt2[d])
            if not advanced:
                sp -= 1
                pe = parent_edge[v]
                if pe != -1:
                    # tree edge into v is complete; fold into grandparent
                    u = src[pe]
                    nesting[pe] = 2 * lowpt[pe]
                    if lowpt2[pe] < height[u]:
                        nesting[pe] += 1
                    ppe = parent_edge[u]
                    if ppe != -1:
                        if lowpt[pe] < lowpt[ppe]:
                            lowpt2[ppe] = min(lowpt[ppe], lowpt2[pe])
                            lowpt[ppe] = lowpt[pe]
                        elif lowpt[pe] > lowpt[ppe]:
                            lowpt2[ppe] = min(lowpt2[ppe], lowpt[pe])
                        else:
                            lowpt2[ppe] = min(lowpt2[ppe], lowpt2[pe])

    # ordered adjacency: oriented out-edges, stable-sorted by nesting depth
    ord_start = np.zeros(n + 1, np.int64)
    for d in range(ne2):
        if oriented[d] == 1:
            ord_start[src[d] + 1] += 1
    for v in range(n):
        ord_start[v + 1] += ord_start[v]
    cursor = ord_start[:n].copy()
    ord_list = np.empty(e, np.int64)
    for i in range(ne2):
        d = adj_out[i]
        if oriented[d] == 1:
            v = src[d]
            ord_list[cursor[v]] = d
            cursor[v] += 1
    for v in range(n):
        lo = ord_start[v]
        hi = ord_start[v + 1]
        for i in range(lo + 1, hi):
            key = ord_list[i]
            kn = nesting[key]
            j = i - 1
            while j >= lo and nesting[ord_list[j]] > kn:
                ord_list[j + 1] = ord_list[j]
                j -= 1
            ord_list[j + 1] = key

    # phase 2: conflict-pair testing
    cap = e + 2
    S_Ll = np.empty(cap, np.int64)
    S_Lh = np.empty(cap, np.int64)
    S_Rl = np.empty(cap, np.int64)
    S_Rh = np.empty(cap, np.int64)
    S_id = np.empty(cap, np.int64)
    ssp = 0
    serial = np.int64(0)
    stack_bottom = np.full(ne2, -2, np.int64)
    lowpt_edge = np.full(ne2, -1, np.int64)
    ref = np.full(ne2, -1, np.int64)
    resume = np.full(n, -1, np.int64)

    for root in range(n):
        if parent_edge[root] != -1:
            continue
        sp = 0
        vstack[sp] = root
        sp += 1
        ptr[root] = ord_start[root]
        while sp > 0:
            v = vstack[sp - 1]
            pe = parent_edge[v]
            if resume[v] != -1:
                # a child subtree just finished; integrate its tree edge
                ei = resume[v]
                resume[v] = -1
                st, ssp, serial = _integrate(
                    v, pe, ei, height, lowpt, lowpt_edge, ref, stack_bottom,
                    ord_start, ord_list, S_Ll, S_Lh, S_Rl, S_Rh, S_id,
                    ssp, serial)
                if st != 1:
                    return st
            advanced = False
            while ptr[v] < ord_start[v + 1]:
                ei = ord_list[ptr[v]]
                ptr[v] += 1
                w = dst[ei]
                stack_bottom[ei] = S_id[ssp - 1] if ssp > 0 else np.int64(-1)
                if ei == parent_edge[w]:
                    resume[v] = ei
                    ptr[w] = ord_start[w]
                    vstack[sp] = w
                    sp += 1
                    advanced = True
                    break
                lowpt_edge[ei] = ei
                S_Ll[ssp] = -1
                S_Lh[ssp] = -1
                S_Rl[ssp] = ei
                S_Rh[ssp] = ei
                S_id[ssp] = serial
                serial += 1
                ssp += 1
                st, ssp, serial = _integrate(
                    v, pe, ei, height, lowpt, lowpt_edge, ref, stack_bottom,
                    ord_start, ord_list, S_Ll, S_Lh, S_Rl, S_Rh, S_id,
                    ssp, serial)
                if st != 1:
                    return st
            if not advanced:
                sp -= 1
                if pe != -1:
                    ssp = _remove_back_edges(
                        pe, src, dst, height, lowpt, ref,
                        S_Ll, S_Lh, S_Rl, S_Rh, S_id, ssp)
    return 1


@optional_njit(cache=True, nogil=True)
def rotation_planar(n, eu, ev, max_states):
    """Exhaustive rotation-system search for a genus-0 embedding.

    Input must be connected. Rotations are enumerated with the first
    incident half-edge of every vertex pinned (cyclic shifts of a rotation
    give the same face structure), so the state space is prod (deg-1)!.
    Returns 1 if some rotation system has e - n + 2 faces, 0 if none does,
    -1 if max_states was exhausted first.
    """
    e = eu.shape[0]
    if e == 0 or n <= 2:
        return 1
    src, dst, adj_start, adj_out = _csr_from_edges(n, eu, ev)
    ne2 = 2 * e
    target_faces = e - n + 2

    fact = np.ones(16, np.int64)
    for i in range(1, 16):
        fact[i] = fact[i - 1] * i
    radix = np.empty(n, np.int64)
    for v in range(n):
        d = adj_start[v + 1] - adj_start[v]
        radix[v] = fact[d - 1] if d >= 1 else 1

    digits = np.zeros(n, np.int64)
    rot = np.empty(ne2, np.int64)
    succ = np.empty(ne2, np.int64)
    visited = np.empty(ne2, np.uint8)
    pool = np.empty(16, np.int64)
    states = np.int64(0)
    while True:
        states += 1
        if states > max_states:
            return -1
        for v in range(n):
            lo = adj_start[v]
            hi = adj_start[v + 1]
            d = hi - lo
            if d <= 0:
                continue
            rot[lo] = adj_out[lo]
            k = d - 1
            for i in range(k):
                pool[i] = adj_out[lo + 1 + i]
            code = digits[v]
            for i in range(k):
                f = fact[k - 1 - i]
                idx = code // f
                code = code % f
                rot[lo + 1 + i] = pool[idx]
                for j in range(idx, k - i - 1):
                    pool[j] = pool[j + 1]
            for i in range(lo, hi):
                nxt = lo + (i - lo + 1) % d
                succ[rot[i]] = rot[nxt]
        for i in range(ne2):
            visited[i] = 0
        faces = 0
        for s in range(ne2):
            if visited[s] == 1:
                continue
            faces += 1
            c = s
            while visited[c] == 0:
                visited[c] = 1
                c = succ[c ^ 1]
        if faces == target_faces:
            return 1
        at = 0
        while at < n:
            digits[at] += 1
            if digits[at] < radix[at]:
                break
            digits[at] = 0
            at += 1
        if at == n:
            return 0
