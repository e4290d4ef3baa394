"""Time the batch insertion kernels compiled with numba against their Python bodies.

    python3 benchmarks/bench_insertion.py --n 7 --repeat 3

Both variants run on the same permutation array and their outputs are compared
before any timing is reported.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from shiftedpr import _kernels
from shiftedpr.insertion import permutation_array

KERNELS = {
    "sw_insert_batch": lambda f, a: f(a),
    "rs_insert_batch": lambda f, a: f(a),
    "marked_descent_masks": lambda f, a: f(_kernels.sw_insert_batch(a)[1]),
}


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def same(x, y) -> bool:
    if isinstance(x, tuple):
        return all(np.array_equal(a, b) for a, b in zip(x, y))
    return np.array_equal(x, y)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7, help="permutation length (all of S_n)")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-limit", type=int, default=5040,
                    help="rows fed to the pure-Python body (it is slow)")
    args = ap.parse_args()

    arr = permutation_array(args.n)
    sub = arr[: args.python_limit]
    print(f"numba compiled: {_kernels.NUMBA}; S_{args.n}: {len(arr)} rows, python rows: {len(sub)}")
    print(f"{'kernel':<22}{'numba rows/s':>16}{'python rows/s':>16}{'speedup':>10}")
    for name, call in KERNELS.items():
        kern = getattr(_kernels, name)
        call(kern, arr[:2])  # compile outside the timed region
        if not same(call(kern, sub), call(kern.py_func, sub)):
            raise SystemExit(f"{name}: compiled and Python outputs differ")
        fast = len(arr) / best_of(lambda: call(kern, arr), args.repeat)
        slow = len(sub) / best_of(lambda: call(kern.py_func, sub), args.repeat)
        print(f"{name:<22}{fast:>16,.0f}{slow:>16,.0f}{fast / slow:>9.1f}x")


if __name__ == "__main__":
    main()
