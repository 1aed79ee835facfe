"""Timing comparison of the two elimination kernels.

Runs the compiled and the pure-Python fraction-free elimination on the
same inputs: dense random integer matrices and the real pair-condition
systems the solvers build.  The kernels are interchangeable (identical
pivot rule, bit-identical output), so the numbers isolate interpreter
overhead on the hot loop.

Usage: python benchmarks/bench_elim.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import random
import time
from math import lcm

from hpade._elim_py import echelon as python_echelon
from hpade.normality import random_tuple
from hpade.type2_hp import MultiIndexType2, build_type2_system

try:
    from hpade._elim import echelon as compiled_echelon
except ImportError:
    compiled_echelon = None


def random_matrix(seed: int, size: int, magnitude: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [
        [rng.randint(-magnitude, magnitude) for _ in range(size + 1)]
        for _ in range(size)
    ]


def type2_rows(seed: int, m: int, n: int) -> list[list[int]]:
    """Integer rows of the augmented type II system for a seeded tuple."""
    F = random_tuple(seed=seed, m=m, num_coeffs=m * n + n, height=10)
    matrix, rhs = build_type2_system(F, MultiIndexType2(n=n, s=0, m=m))
    rows = []
    for i in range(matrix.rows):
        row = list(matrix.row(i)) + [rhs[i]]
        scale = lcm(*(f.denominator for f in row))
        rows.append([int(f * scale) for f in row])
    return rows


def best_of(kernel, rows: list[list[int]], repeats: int) -> float:
    timings = []
    for _ in range(repeats):
        work = [row[:] for row in rows]  # elimination mutates in place
        start = time.perf_counter()
        kernel(work, len(work), len(work[0]))
        timings.append(time.perf_counter() - start)
    return min(timings)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    workloads = [
        ("random 24x25, |entry| <= 10^3", random_matrix(1, 24, 10**3)),
        ("random 48x49, |entry| <= 10^3", random_matrix(2, 48, 10**3)),
        ("random 48x49, |entry| <= 10^9", random_matrix(3, 48, 10**9)),
        ("type II system m=2 n=3 (18x19)", type2_rows(11, 2, 3)),
        ("type II system m=3 n=4 (48x49)", type2_rows(12, 3, 4)),
    ]

    print(f"{'workload':<34} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, rows in workloads:
        t_py = best_of(python_echelon, rows, args.repeats)
        if compiled_echelon is None:
            print(f"{label:<34} {t_py * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        t_c = best_of(compiled_echelon, rows, args.repeats)
        print(
            f"{label:<34} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms {t_py / t_c:>7.2f}x"
        )
    if compiled_echelon is None:
        print("compiled kernel not built; install with Cython and a C compiler")


if __name__ == "__main__":
    main()
