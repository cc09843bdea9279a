"""Compare the compiled and pure-Python subset-transform kernels.

Runs the zeta and Mobius transforms on random int64-range inputs for a
range of universe sizes and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--max-n 22] [--repeats 3]
"""

from __future__ import annotations

import argparse
import random
import time

from marginal_choice import kernels
from marginal_choice.kernels import _reference


def time_call(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=14)
    parser.add_argument("--max-n", type=int, default=22)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if kernels.BACKEND != "compiled":
        print("compiled backend unavailable; timing the reference only")

    rng = random.Random(0)
    header = f"{'n':>3} {'transform':>9} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in range(args.min_n, args.max_n + 1, 2):
        values = [rng.randint(-(10**6), 10**6) for _ in range(1 << n)]
        for name, ref_fn, fast_available in (
            ("zeta", _reference.zeta, True),
            ("mobius", _reference.mobius, True),
        ):
            t_py = time_call(ref_fn, list(values), n, repeats=args.repeats)
            if kernels.BACKEND == "compiled":
                assert kernels._fits_int64(values, n)
                t_fast = time_call(
                    getattr(kernels, name), values, n, repeats=args.repeats
                )
                speedup = t_py / t_fast if t_fast > 0 else float("inf")
                print(
                    f"{n:>3} {name:>9} {t_py:>12.4f} {t_fast:>13.4f} {speedup:>7.1f}x"
                )
            else:
                print(f"{n:>3} {name:>9} {t_py:>12.4f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()
