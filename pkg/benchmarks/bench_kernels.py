"""Compare the compiled and pure-Python age kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from boxpoly import kernels
from boxpoly.families import GeometricFamily
from boxpoly.simplex import OneRowSimplex

CASES = [
    ("sixteen ones, N=331", OneRowSimplex((1,) * 16, 331)),
    ("non-unimodal row, N=5461", OneRowSimplex((6, 5, 4, 7, 6, 5, 4, 4, 4, 4, 4, 6, 7), 5461)),
    ("geometric q=3 k=10", GeometricFamily(3, 10).simplex()),
    ("random d=11, N=200003", OneRowSimplex((477, 315, 345, 453, 292, 391, 420, 113, 28, 151), 200003)),
]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"default backend: {kernels.BACKEND}")
    print(f"{'case':32s} {'N':>8s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, s in CASES:
        py = best_time(lambda: kernels.age_counts(s.steps, s.N, backend="python"), args.repeat)
        if kernels.BACKEND == "cython":
            cy = best_time(lambda: kernels.age_counts(s.steps, s.N, backend="cython"), args.repeat)
            same = kernels.age_counts(s.steps, s.N, backend="python") == kernels.age_counts(
                s.steps, s.N, backend="cython"
            )
            ratio = f"{py / cy:8.1f}" if cy > 0 else "     inf"
            print(f"{name:32s} {s.N:8d} {py:10.4f} {cy:10.4f} {ratio}{'' if same else '  MISMATCH'}")
        else:
            print(f"{name:32s} {s.N:8d} {py:10.4f} {'n/a':>10s} {'n/a':>8s}")


if __name__ == "__main__":
    main()
