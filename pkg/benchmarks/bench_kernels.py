#!/usr/bin/env python3
"""Compare the compiled kernel lane against the pure-Python fallback.

Times the micro kernels and the two loops that dominate real runs: group
sampling and randomized code search.  Run from a checkout:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from cosetqec._kernels import _fallback

try:
    from cosetqec._kernels import _speedups
except ImportError:
    _speedups = None


def _time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_multiply(impl, n=200_000):
    rng = random.Random(0)
    ops = [
        (
            rng.randrange(4),
            rng.getrandbits(12),
            rng.getrandbits(12),
            rng.randrange(4),
            rng.getrandbits(12),
            rng.getrandbits(12),
        )
        for _ in range(1000)
    ]
    mul = impl.multiply_packed

    def run():
        for _ in range(n // 1000):
            for args in ops:
                mul(*args)

    return run, n


def bench_rank(impl, n=20_000):
    rng = random.Random(1)
    batches = [[rng.getrandbits(24) for _ in range(12)] for _ in range(200)]
    rank = impl.rank_f2

    def run():
        for _ in range(n // 200):
            for rows in batches:
                rank(rows)

    return run, n


def bench_sample_groups(impl, n=20_000):
    sample = impl.random_group_packed

    def run():
        for seed in range(n):
            sample(5, seed)

    return run, n


def bench_search(impl, n=50_000):
    from cosetqec.golden import single_qubit_errors

    errs = single_qubit_errors(5)
    ea = [e.x for e in errs]
    eb = [e.z for e in errs]
    search = impl.search_range

    def run():
        # impossible target: scans the whole range without early exit
        search(5, ea, eb, 3, 12345, 0, n)

    return run, n


BENCHES = [
    ("multiply_packed", bench_multiply),
    ("rank_f2", bench_rank),
    ("random_group p=5", bench_sample_groups),
    ("search candidates p=5", bench_search),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    lanes = [("python", _fallback)]
    if _speedups is not None:
        lanes.append(("compiled", _speedups))
    else:
        print("compiled kernels not built; timing the fallback only\n")

    header = f"{'kernel':<24}" + "".join(f"{name + ' ops/s':>18}" for name, _ in lanes)
    if len(lanes) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, factory in BENCHES:
        rates = []
        for _, impl in lanes:
            run, ops = factory(impl)
            best = _time(run, repeat=args.repeat)
            rates.append(ops / best)
        row = f"{name:<24}" + "".join(f"{rate:>18,.0f}" for rate in rates)
        if len(rates) == 2:
            row += f"{rates[1] / rates[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
