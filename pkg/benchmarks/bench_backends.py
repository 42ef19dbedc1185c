#!/usr/bin/env python3
"""Benchmark the compiled multiply kernel against the pure-Python fallback.

Usage:
    python benchmarks/bench_backends.py [--sizes 100,300,1000] [--repeats 3]

Multiplies pairs of random polynomials of each size with both kernels and
prints per-size mean wall times plus the speedup ratio.  The compiled
kernel must be built (pip install . does it) for the comparison column to
appear; otherwise only the pure timings print.
"""

import argparse
import statistics
import time

from sparsepoly import _kernel_py
from sparsepoly.cli import rmvp

try:
    from sparsepoly import _kernel_c
except ImportError:
    _kernel_c = None


def _time_one(fn, p, q, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(p, q)
        times.append(time.perf_counter() - start)
    return statistics.mean(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="100,300,1000")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--symbols", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    header = f"{'terms':>7} {'pure (s)':>12}"
    if _kernel_c is not None:
        header += f" {'compiled (s)':>14} {'speedup':>9}"
    print(header)

    for n in sizes:
        p = rmvp(n, 3, 5, args.symbols, seed=10)._terms
        q = rmvp(n, 3, 5, args.symbols, seed=11)._terms
        t_pure = _time_one(_kernel_py.mul_terms, p, q, args.repeats)
        row = f"{n:>7} {t_pure:>12.4f}"
        if _kernel_c is not None:
            t_c = _time_one(_kernel_c.mul_terms, p, q, args.repeats)
            if _kernel_c.mul_terms(p, q) != _kernel_py.mul_terms(p, q):
                raise AssertionError("kernels disagree on the benchmark input")
            row += f" {t_c:>14.4f} {t_pure / t_c:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
