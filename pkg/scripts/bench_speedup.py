#!/usr/bin/env python3
"""Time the naive and window-based kernels over a grid of sample counts.

Prints per-size medians, the speedup, and the ratio between consecutive
sizes, which shows the quadratic-vs-loglinear growth directly.
"""

import argparse

from csufs import run_benchmark
from csufs.cli import parse_int_list


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-list", type=parse_int_list, default=[1000, 2000, 4000],
                        help="comma list of sample counts")
    parser.add_argument("--m", type=int, default=50, help="features per matrix")
    parser.add_argument("--k", type=int, default=5, help="neighbor count")
    parser.add_argument("--reps", type=int, default=3, help="repetitions per cell (median taken)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    report = run_benchmark(args.n_list, m=args.m, k=args.k, reps=args.reps,
                           seed=args.seed, threads=args.threads)
    print(f"{'n':>8} {'naive_s':>10} {'optimized_s':>12} {'speedup':>8} {'agree':>6}")
    for cell in report.grid:
        print(f"{cell.n:>8} {cell.naive_seconds:>10.4f} {cell.optimized_seconds:>12.4f} "
              f"{cell.speedup:>8.1f} {'yes' if cell.agreement else 'NO':>6}")
    for prev, cur in zip(report.grid, report.grid[1:]):
        factor = cur.n / prev.n
        print(f"n {prev.n} -> {cur.n} (x{factor:.1f}): naive x{cur.naive_seconds / prev.naive_seconds:.2f}, "
              f"optimized x{cur.optimized_seconds / prev.optimized_seconds:.2f}")
    if not report.all_agree:
        raise SystemExit("kernel outputs disagreed; timings above are not meaningful")


if __name__ == "__main__":
    main()
