"""Branch-and-bound canonical labeling and automorphism kernels.

The canonical key of a graph on n <= 11 vertices is the minimum, over all
vertex orderings compatible with the descending degree sequence, of the
adjacency upper triangle read row by row as a big-endian bit string. That
fits in 55 bits, so keys are plain int64 and two graphs are isomorphic iff
their keys are equal.

Two prunings keep the search polynomial on the symmetric inputs that are
worst for naive labeling: a prefix cut against the incumbent's per-level
key, and a twin skip (if u and v agree on every other vertex, swapping
them is an automorphism, so only one of them is tried per search node).
"""

from __future__ import annotations

import numpy as np

from ._accel import optional_njit

KEY_INF = np.int64(1) << np.int64(62)


@optional_njit(cache=True, nogil=True)
def canonical_key_kernel(adj):
    n = adj.shape[0]
    if n <= 1:
        return np.int64(0)
    deg = np.zeros(n, np.int64)
    for u in range(n):
        s = 0
        for v in range(n):
            s += adj[u, v]
        deg[u] = s
    tdeg = np.sort(deg)[::-1].copy()

    twin = np.zeros((n, n), np.uint8)
    for u in range(n):
        for v in range(u + 1, n):
            same = True
            for w in range(n):
                if w != u and w != v and adj[u, w] != adj[v, w]:
                    same = False
                    break
            if same:
                twin[u, v] = 1
                twin[v, u] = 1

    best_level = np.full(n, KEY_INF, np.int64)
    cur_level = np.zeros(n, np.int64)
    chosen = np.zeros(n, np.int64)
    used = np.zeros(n, np.uint8)
    cand = np.zeros((n, n), np.int64)
    cand_val = np.zeros((n, n), np.int64)
    cand_cnt = np.zeros(n, np.int64)
    cand_ptr = np.zeros(n, np.int64)
    tried = np.zeros((n, n), np.int64)
    tried_cnt = np.zeros(n, np.int64)
    best_found = False

    # seed level 0 candidates (row value is always 0 there)
    cnt = 0
    for v in range(n):
        if deg[v] == tdeg[0]:
            cand[0, cnt] = v
            cand_val[0, cnt] = 0
            cnt += 1
    cand_cnt[0] = cnt
    cand_ptr[0] = 0
    tried_cnt[0] = 0

    level = 0
    while True:
        if cand_ptr[level] < cand_cnt[level]:
            i = cand_ptr[level]
            cand_ptr[level] += 1
            v = cand[level, i]
            val = cand_val[level, i]
            skip = False
            for j in range(tried_cnt[level]):
                if twin[tried[level, j], v] == 1:
                    skip = True
                    break
            if skip:
                continue
            tried[level, tried_cnt[level]] = v
            tried_cnt[level] += 1
            prev = cur_level[level - 1] if level > 0 else np.int64(0)
            newkey = (prev << level) | val
            if best_found and newkey > best_level[level]:
                continue
            cur_level[level] = newkey
            chosen[level] = v
            if level == n - 1:
                if (not best_found) or newkey < best_level[n - 1]:
                    for j in range(n):
                        best_level[j] = cur_level[j]
                    best_found = True
                continue
            used[v] = 1
            level += 1
            # build the next level's candidates ordered by (row value, id)
            cnt = 0
            for w in range(n):
                if used[w] == 0 and deg[w] == tdeg[level]:
                    rowval = np.int64(0)
                    for j in range(level):
                        rowval = (rowval << 1) | adj[w, chosen[j]]
                    k = cnt
                    while k > 0 and (cand_val[level, k - 1] > rowval):
                        cand[level, k] = cand[level, k - 1]
                        cand_val[level, k] = cand_val[level, k - 1]
                        k -= 1
                    cand[level, k] = w
                    cand_val[level, k] = rowval
                    cnt += 1
            cand_cnt[level] = cnt
            cand_ptr[level] = 0
            tried_cnt[level] = 0
        else:
            if level == 0:
                break
            level -= 1
            used[chosen[level]] = 0
    return best_level[n - 1]


@optional_njit(cache=True, nogil=True)
def automorphisms_kernel(adj, max_count):
    """All adjacency-preserving vertex bijections, as rows of a perm array.

    Returns (count, perms). count == -1 means more than max_count exist and
    the caller should treat the group as unavailable.
    """
    n = adj.shape[0]
    perms = np.zeros((max_count, n), np.int64)
    if n == 0:
        return 1, perms[:0]
    deg = np.zeros(n, np.int64)
    for u in range(n):
        s = 0
        for v in range(n):
            s += adj[u, v]
        deg[u] = s
    image = np.full(n, -1, np.int64)
    used = np.zeros(n, np.uint8)
    ptr = np.zeros(n + 1, np.int64)
    count = 0
    level = 0
    ptr[0] = 0
    while level >= 0:
        if level == n:
            if count >= max_count:
                return -1, perms
            for j in range(n):
                perms[count, j] = image[j]
            count += 1
            level -= 1
            used[image[level]] = 0
            continue
        found = False
        v = ptr[level]
        while v < n:
            if used[v] == 0 and deg[v] == deg[level]:
                ok = True
                for j in range(level):
                    if adj[v, image[j]] != adj[level, j]:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            v += 1
        if found:
            image[level] = v
            used[v] = 1
            ptr[level] = v + 1
            level += 1
            ptr[level] = 0
        else:
            level -= 1
            if level >= 0:
                used[image[level]] = 0
    return count, perms
