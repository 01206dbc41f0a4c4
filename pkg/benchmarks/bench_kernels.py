#!/usr/bin/env python3
"""Time the numba kernels against their numpy / pure-Python fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from rankcrank import _accel, kernels
from rankcrank.series import partition_numbers


def best_of(fn, *args, repeat=5):
    fn(*args)  # warm up (and compile)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    p = np.array(partition_numbers(300), dtype=np.int64)
    rng = np.random.default_rng(0)
    mat = rng.integers(0, 10007, size=(120, 160)).astype(np.int64)
    yield ("crank product, order 300", kernels.crank_product_jit, kernels.crank_product_numpy, (300,))
    yield ("stat table a=3, order 300", kernels.stat_table_jit, kernels.stat_table_numpy, (p, 3, 300))
    yield ("enumerate stats, n = 45", kernels.enumerate_stats_jit, kernels.enumerate_stats_py, (45,))
    yield ("rref mod 10007, 120x160", kernels.rref_mod_jit, kernels.rref_mod_numpy,
           (mat, np.int64(10007)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<28} {'numba':>10} {'fallback':>10} {'speedup':>8}")
    for name, jit, fallback, a in cases():
        a_jit = tuple(x.copy() if isinstance(x, np.ndarray) else x for x in a)
        tj = best_of(jit, *a_jit, repeat=args.repeat)
        tf = best_of(fallback, *a, repeat=args.repeat)
        print(f"{name:<28} {tj * 1e3:>8.2f}ms {tf * 1e3:>8.2f}ms {tf / tj:>7.1f}x")


if __name__ == "__main__":
    main()
