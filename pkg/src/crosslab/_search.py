"""Planarization feasibility kernel for the crossing-number solver.

A drawing of G with k crossings corresponds to a choice of k crossing
pairs of independent edges plus, for every edge crossed more than once,
the order of its crossings, such that the planarization skeleton (each
crossing replaced by a degree-4 dummy vertex) is planar. The kernel
enumerates k-subsets of candidate pairs in lexicographic order with an
automorphism prefix cut, then runs a mixed-radix odometer over crossing
orders, testing each skeleton with the left-right kernel.

Symmetry cut: a prefix is abandoned iff some automorphism image of it is
lexicographically smaller. Extensions only append indices above the
prefix maximum, which can only preserve that relation, so the first
feasible subset found is the lexicographically least feasible subset,
with or without the cut. That makes results deterministic and
budget-for-budget reproducible.

Statuses: 1 found, 0 refuted, 2 budget exhausted, 3 internal error.
"""

from __future__ import annotations

import numpy as np

from ._accel import optional_njit
from ._lr import lr_planar_status


@optional_njit(cache=True, nogil=True)
def feasibility_search(n, eu, ev, pair_a, pair_b, perms, k, budget):
    E = eu.shape[0]
    P = pair_a.shape[0]
    A = perms.shape[0]
    calls = np.int64(0)
    subset_out = np.full(max(k, 1), -1, np.int64)
    code_out = np.int64(-1)

    if k == 0:
        st = lr_planar_status(n, eu, ev)
        calls += 1
        if st == 2:
            return 3, calls, subset_out, code_out
        if st == 1:
            return 1, calls, subset_out, np.int64(0)
        return 0, calls, subset_out, code_out
    if P < k:
        return 0, calls, subset_out, code_out

    choice = np.zeros(k, np.int64)
    nxt = np.zeros(k + 1, np.int64)
    tmp = np.zeros(k, np.int64)
    cnt = np.zeros(E, np.int64)
    le_start = np.zeros(E + 1, np.int64)
    le_items = np.zeros(2 * k, np.int64)
    order_items = np.zeros(2 * k, np.int64)
    pool = np.zeros(k + 1, np.int64)
    sk_u = np.zeros(E + 2 * k, np.int64)
    sk_v = np.zeros(E + 2 * k, np.int64)
    multi = np.zeros(E, np.int64)
    digits = np.zeros(E, np.int64)
    radix = np.zeros(E, np.int64)
    fact = np.ones(21, np.int64)
    for i in range(1, 21):
        fact[i] = fact[i - 1] * i

    depth = 0
    nxt[0] = 0
    while depth >= 0:
        start = nxt[depth]
        if start >= P or P - start < k - depth:
            depth -= 1
            continue
        nxt[depth] = start + 1
        choice[depth] = start

        pruned = False
        for a in range(A):
            m = depth + 1
            for j in range(m):
                x = perms[a, choice[j]]
                t = j
                while t > 0 and tmp[t - 1] > x:
                    tmp[t] = tmp[t - 1]
                    t -= 1
                tmp[t] = x
            smaller = False
            for j in range(m):
                if tmp[j] < choice[j]:
                    smaller = True
                    break
                if tmp[j] > choice[j]:
                    break
            if smaller:
                pruned = True
                break
        if pruned:
            continue

        if depth < k - 1:
            depth += 1
            nxt[depth] = start + 1
            continue

        # leaf: crossing lists per edge
        for i in range(E):
            cnt[i] = 0
        for j in range(k):
            p = choice[j]
            cnt[pair_a[p]] += 1
            cnt[pair_b[p]] += 1
        le_start[0] = 0
        for i in range(E):
            le_start[i + 1] = le_start[i] + cnt[i]
            cnt[i] = 0
        for j in range(k):
            p = choice[j]
            a1 = pair_a[p]
            b1 = pair_b[p]
            le_items[le_start[a1] + cnt[a1]] = j
            cnt[a1] += 1
            le_items[le_start[b1] + cnt[b1]] = j
            cnt[b1] += 1
        nmulti = 0
        for i in range(E):
            c = le_start[i + 1] - le_start[i]
            if c >= 2:
                multi[nmulti] = i
                radix[nmulti] = fact[c]
                digits[nmulti] = 0
                nmulti += 1

        while True:
            for i in range(2 * k):
                order_items[i] = le_items[i]
            for mi in range(nmulti):
                edge = multi[mi]
                lo = le_start[edge]
                c = le_start[edge + 1] - lo
                code = digits[mi]
                for t in range(c):
                    pool[t] = le_items[lo + t]
                for t in range(c):
                    f = fact[c - 1 - t]
                    idx = code // f
                    code = code % f
                    order_items[lo + t] = pool[idx]
                    for s in range(idx, c - t - 1):
                        pool[s] = pool[s + 1]
            pos = 0
            for i in range(E):
                prev = eu[i]
                for t in range(le_start[i], le_start[i + 1]):
                    dv = n + order_items[t]
                    sk_u[pos] = prev
                    sk_v[pos] = dv
                    pos += 1
                    prev = dv
                sk_u[pos] = prev
                sk_v[pos] = ev[i]
                pos += 1
            st = lr_planar_status(n + k, sk_u, sk_v)
            calls += 1
            if st == 2:
                return 3, calls, subset_out, code_out
            if st == 1:
                for j in range(k):
                    subset_out[j] = choice[j]
                code = np.int64(0)
                factor = np.int64(1)
                for mi in range(nmulti):
                    code += digits[mi] * factor
                    factor *= radix[mi]
                return 1, calls, subset_out, code
            if calls >= budget:
                return 2, calls, subset_out, code_out
            mi = 0
            while mi < nmulti:
                digits[mi] += 1
                if digits[mi] < radix[mi]:
                    break
                digits[mi] = 0
                mi += 1
            if mi == nmulti:
                break
    return 0, calls, subset_out, code_out
