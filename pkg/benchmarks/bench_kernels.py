#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the reweighting solver, the simplex oracle, and raw objective
evaluation over a corpus of seeded random tetrahedra, and prints the
per-backend totals with speedups.

Usage: python benchmarks/bench_kernels.py [--count 300] [--seed 0]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tetrafermat import _pykernels
from tetrafermat.sampling import random_tetrahedron

try:
    from tetrafermat import _native
except ImportError:
    _native = None


def bench(impl, corpus) -> dict[str, float]:
    out = {}

    t0 = time.perf_counter()
    for v, c in corpus:
        impl.weiszfeld(v, c[0], c[1], c[2], 1e-10, 10000, 1e-9, 1e-8, 1e-9)
    out["weiszfeld"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for v, c in corpus:
        impl.nelder_mead(v, c[0], c[1], c[2], 0.2, 1e-10, 1e-13, 600)
    out["nelder_mead"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for v, c in corpus:
        for _ in range(100):
            impl.distance_sum(v, c[0], c[1], c[2])
    out["distance_sum x100"] = time.perf_counter() - t0

    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    corpus = []
    for i in range(args.count):
        t = random_tetrahedron(args.seed, i)
        c = t.centroid()
        corpus.append((np.asarray(t.vertices), (float(c[0]), float(c[1]), float(c[2]))))

    py = bench(_pykernels, corpus)
    if _native is None:
        print("compiled backend not available; pure-Python timings only")
        for name, dt in py.items():
            print(f"  {name:<18} {dt * 1e3:9.2f} ms")
        return

    nat = bench(_native, corpus)
    print(f"{args.count} tetrahedra, seed {args.seed}")
    print(f"{'kernel':<18} {'python':>10} {'native':>10} {'speedup':>9}")
    for name in py:
        print(
            f"{name:<18} {py[name] * 1e3:8.2f}ms {nat[name] * 1e3:8.2f}ms "
            f"{py[name] / nat[name]:8.1f}x"
        )


if __name__ == "__main__":
    main()
