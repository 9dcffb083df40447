#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times each hot reduction on representative workloads (median over repeats,
after a warm-up call so JIT compilation is not billed) and prints a table
with the speedup of the active numba path over numpy.

Usage:
    python benchmarks/bench_kernels.py [--repeats N] [--block-n N]
"""

import argparse
import time

import numpy as np

from rct import _kernels


def median_time(fn, args, repeats):
    fn(*args)  # warm-up / compile
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return float(np.median(times))


def workloads(block_n):
    rng = np.random.default_rng(0)
    small = rng.dirichlet(np.ones(8))
    big = rng.dirichlet(np.ones(4096))
    big2 = rng.dirichlet(np.ones(4096))
    lengths = -np.log2(big)
    return [
        ("kraft_sum/4096", "kraft_sum", (lengths,)),
        ("neg_plogp_bits/4096", "neg_plogp_bits", (big,)),
        ("kl_bits/4096", "kl_bits", (big, big2)),
        ("power_sum_ln/4096 q=0.5", "power_sum_ln", (big, 0.5)),
        ("cross_power_sum_ln/4096 q=1.5", "cross_power_sum_ln", (big, big2, 1.5)),
        (f"block_integer_length_bits 2^{block_n}", "block_integer_length_bits",
         (np.array([0.9, 0.1]), block_n)),
        ("neg_plogp_bits/8 (tiny)", "neg_plogp_bits", (small,)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--block-n", type=int, default=18,
                        help="binary block size for the enumeration kernel")
    args = parser.parse_args()

    if _kernels.NUMBA_BACKEND is None:
        print("numba is not importable; only the numpy path is available")
        return

    print(f"active backend: {_kernels.BACKEND} (RCT_NUMBA toggles selection)")
    print(f"{'workload':34s} {'numpy':>12s} {'numba':>12s} {'speedup':>9s}")
    for label, name, call_args in workloads(args.block_n):
        t_np = median_time(_kernels.NUMPY_BACKEND[name], call_args, args.repeats)
        t_nb = median_time(_kernels.NUMBA_BACKEND[name], call_args, args.repeats)
        print(
            f"{label:34s} {t_np * 1e6:10.2f}us {t_nb * 1e6:10.2f}us "
            f"{t_np / t_nb:8.2f}x"
        )


if __name__ == "__main__":
    main()
