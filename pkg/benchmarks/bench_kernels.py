"""Benchmark: compiled kernels vs the pure-Python twin.

Runs the three hot kernels on a fixed randomized workload plus the one
genuinely heavy case from the examples (Smith form of A^48 - Id for the
quartic automorphism, whose entries reach 40+ digits) and prints a
side-by-side table.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from bftorus.exactmat import mat_pow
from bftorus.kernels import load_backend


def _workloads():
    rng = random.Random(20260816)
    snf_small = [
        [[rng.randint(-20, 20) for _ in range(5)] for _ in range(5)] for _ in range(40)
    ]
    snf_big = [
        [[rng.randint(-10**12, 10**12) for _ in range(7)] for _ in range(7)]
        for _ in range(6)
    ]
    hnf = [
        [[rng.randint(-10**6, 10**6) for _ in range(8)] for _ in range(12)]
        for _ in range(40)
    ]
    det = [
        [[rng.randint(-10**9, 10**9) for _ in range(10)] for _ in range(10)]
        for _ in range(40)
    ]
    m_quartic = [[-1, -1, -1, -4], [4, 1, 3, 8], [0, 1, 0, 0], [0, 0, 1, 7]]
    a48 = mat_pow(m_quartic, 48)
    per48 = [
        [a48[i][j] - (1 if i == j else 0) for j in range(4)] for i in range(4)
    ]
    return [
        ("snf 5x5 small entries (x40)", "snf_rows", snf_small),
        ("snf 7x7 12-digit entries (x6)", "snf_rows", snf_big),
        ("snf of A^48 - Id, quartic (x1)", "snf_rows", [per48]),
        ("hnf 12 cols of len 8 (x40)", "hnf_cols", hnf),
        ("det 10x10 Bareiss (x40)", "det_bareiss", det),
    ]


def _time(backend, fn_name, inputs, repeat):
    fn = getattr(backend, fn_name)
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for arg in inputs:
            fn(arg)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = ap.parse_args()

    py = load_backend("python")
    try:
        cy = load_backend("compiled")
    except ImportError:
        print("compiled backend not installed; run pip install -e . first")
        return

    # sanity: identical bits before timing anything
    for _, fn_name, inputs in _workloads():
        for arg in inputs:
            assert getattr(py, fn_name)(arg) == getattr(cy, fn_name)(arg)

    width = max(len(name) for name, _, _ in _workloads())
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  speedup")
    for name, fn_name, inputs in _workloads():
        t_py = _time(py, fn_name, inputs, args.repeat)
        t_cy = _time(cy, fn_name, inputs, args.repeat)
        print(
            f"{name:<{width}}  {t_py * 1e3:>8.2f}ms  {t_cy * 1e3:>8.2f}ms  "
            f"{t_py / t_cy:>6.2f}x"
        )


if __name__ == "__main__":
    main()
