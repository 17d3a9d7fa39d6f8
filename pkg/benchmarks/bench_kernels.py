#!/usr/bin/env python3
"""Benchmark: numba kernels vs. the pure Python / numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeat N] [--samples N]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

import numpy as np

from cubelike import _kernels
from cubelike.cayley import build_graph, cube_with_diagonals
from cubelike.coloring import contrapositive_check, greedy_clique
from cubelike.payan import decode_set, random_codes


@dataclass
class BenchmarkResult:
    name: str
    backend: str
    time_s: float
    detail: str = ""


def _table(g):
    t = g.component_neighbors()
    return t, np.full(t.shape[0], t.shape[1], np.int32)


def bench_qd6(backend: str, repeat: int) -> BenchmarkResult:
    t, deg = _table(cube_with_diagonals(6))
    _kernels.search_coloring(t, deg, 3, [0], [0], 1, backend=backend)  # warm up / compile
    start = time.perf_counter()
    for _ in range(repeat):
        colors, nodes = _kernels.search_coloring(t, deg, 3, [0], [0], 1, backend=backend)
    assert colors is None
    return BenchmarkResult("refute 3-coloring of Q^d_6", backend, (time.perf_counter() - start) / repeat,
                           f"{nodes} nodes")


def bench_random_3col(backend: str, count: int) -> BenchmarkResult:
    graphs = []
    for code in random_codes(6, count, seed=1):
        g = build_graph(6, decode_set(code))
        t, deg = _table(g)
        clique = greedy_clique(t)
        if len(clique) <= 3:
            graphs.append((t, deg, clique))
    _kernels.search_coloring(*graphs[0][:2], 3, backend=backend)
    start = time.perf_counter()
    nodes = 0
    for t, deg, clique in graphs:
        nodes += _kernels.search_coloring(t, deg, 3, clique, list(range(len(clique))), len(clique),
                                          backend=backend)[1]
    return BenchmarkResult(f"3-colorability of {len(graphs)} random n=6 graphs", backend,
                           time.perf_counter() - start, f"{nodes} nodes")


def bench_contrapositive(backend: str, samples: int) -> BenchmarkResult:
    contrapositive_check(4, 1000, backend=backend)
    start = time.perf_counter()
    r = contrapositive_check(4, samples, seed=0, backend=backend)
    return BenchmarkResult(f"reduce + edge scan, {samples} colorings of Q^d_6", backend,
                           time.perf_counter() - start, f"{r['mono_reduced_edges']} mono edges")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--graphs", type=int, default=300)
    parser.add_argument("--samples", type=int, default=100_000)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    results = []
    for search_backend, batch_backend in (("numba", "numba"), ("python", "numpy")):
        results.append(bench_qd6(search_backend, args.repeat))
        results.append(bench_random_3col(search_backend, args.graphs))
        results.append(bench_contrapositive(batch_backend, args.samples))

    width = max(len(r.name) for r in results)
    print(f"{'benchmark':<{width}}  {'backend':<7}  {'time [s]':>9}  detail")
    for r in sorted(results, key=lambda r: r.name):
        print(f"{r.name:<{width}}  {r.backend:<7}  {r.time_s:>9.4f}  {r.detail}")


if __name__ == "__main__":
    main()
