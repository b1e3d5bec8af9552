"""Timing harness: JIT-compiled kernels against their pure-Python source.

Every hot kernel is a single function compiled by optional_njit, so the
pure path is just the dispatcher's py_func attribute and both paths see
identical arguments.  Workloads are fixed and deterministic; each one
asserts that the two paths return the same answer before reporting the
timing, so the benchmark doubles as an equivalence check.

Run as ``python -m crosslab.bench``.  With CROSSLAB_DISABLE_NUMBA=1 the
dispatcher *is* the Python function and the comparison degenerates; the
report says so instead of printing a fake speedup.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from ._accel import USING_NUMBA, kernel_python_function
from ._canonical import automorphisms_kernel, canonical_key_kernel
from ._lr import lr_planar_status, rotation_planar
from ._search import feasibility_search
from .enumeration import enumerate_graphs
from .classes import all_graphs
from .graphs import (Graph, complete_bipartite, complete_graph,
                     petersen_graph)
from .solver import _independent_pairs


def _edge_arrays(g: Graph):
    eu = np.array([u for u, _ in g.edges], np.int64)
    ev = np.array([v for _, v in g.edges], np.int64)
    return eu, ev


def _batch():
    """Fixed graph batch: the classic solver oracles plus a planar grid."""
    grid = Graph(9, [(i, i + 1) for i in (0, 1, 3, 4, 6, 7)]
                 + [(i, i + 3) for i in range(6)])
    return [complete_graph(5), complete_graph(6), complete_bipartite(3, 3),
            complete_bipartite(4, 4), petersen_graph(), grid]


def _workloads():
    batch = [_edge_arrays(g) + (g.n,) for g in _batch()]

    def planarity(fn):
        out = 0
        for eu, ev, n in batch:
            for _ in range(40):
                out += fn(n, eu, ev)
        return out

    k5u, k5v = _edge_arrays(complete_graph(5))

    def rotations(fn):
        # K5 is nonplanar, so this sweeps all prod (d-1)! = 7776 states
        return fn(5, k5u, k5v, 20_000)

    k6 = complete_graph(6)
    k6u, k6v = _edge_arrays(k6)
    pairs = _independent_pairs(k6.edges)
    pa = np.array([p[0] for p in pairs], np.int64)
    pb = np.array([p[1] for p in pairs], np.int64)
    no_syms = np.zeros((0, len(pairs)), np.int64)

    def search(fn):
        # k = 2 < Cr(K6): the search exhausts every 2-subset and fails
        status, calls, _, _ = fn(6, k6u, k6v, pa, pb, no_syms, 2, 10_000_000)
        return status, int(calls)

    mats = [g.adjacency_matrix() for e in range(16)
            for g in enumerate_graphs(all_graphs(), 6, e)]

    def canon(fn):
        return sum(int(fn(m)) & 0xFFFF for m in mats)

    pet = petersen_graph().adjacency_matrix()

    def autos(fn):
        count, perms = fn(pet, 200)
        return int(count), perms.shape

    return [
        ("lr_planar_status", lr_planar_status, planarity),
        ("rotation_planar", rotation_planar, rotations),
        ("feasibility_search", feasibility_search, search),
        ("canonical_key", canonical_key_kernel, canon),
        ("automorphisms", automorphisms_kernel, autos),
    ]


def _time(workload, fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = workload(fn)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def run(repeat: int = 3, out=sys.stdout) -> int:
    rows = []
    for name, kernel, workload in _workloads():
        pure = kernel_python_function(kernel)
        workload(kernel)            # warm-up: JIT compile outside the clock
        jit_t, jit_r = _time(workload, kernel, repeat)
        py_t, py_r = _time(workload, pure, repeat)
        if jit_r != py_r:
            print(f"MISMATCH in {name}: {jit_r!r} != {py_r!r}", file=out)
            return 1
        rows.append((name, jit_t, py_t))

    mode = "numba" if USING_NUMBA else "pure python (numba disabled)"
    print(f"kernel path: {mode}; best of {repeat}", file=out)
    print(f"{'kernel':<20} {'compiled':>12} {'python':>12} {'speedup':>9}",
          file=out)
    for name, jit_t, py_t in rows:
        ratio = py_t / jit_t if jit_t > 0 else float("inf")
        print(f"{name:<20} {jit_t:>11.4f}s {py_t:>11.4f}s {ratio:>8.1f}x",
              file=out)
    if not USING_NUMBA:
        print("note: both columns ran the same interpreted code", file=out)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="crosslab.bench",
        description="time compiled kernels against their python fallbacks")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per kernel (default 3)")
    args = parser.parse_args(argv)
    if args.repeat < 1:
        parser.error("--repeat must be >= 1")
    return run(repeat=args.repeat)


if __name__ == "__main__":
    sys.exit(main())
