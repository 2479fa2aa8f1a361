"""Compare the compiled and numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from flare_sim import _kernels_py

try:
    from flare_sim import _kernels
except ImportError:  # extension not built
    _kernels = None


def cases(rng: np.random.Generator):
    for d, k in ((1_000, 10), (100_000, 100), (1_000_000, 10)):
        v = rng.standard_normal(d)
        yield f"top_k d={d:>9,} k={k}", "top_k_indices", (v, k)
    for d, T in ((100, 500), (100, 2000)):
        noise = rng.standard_normal((T, d)) / np.sqrt(d)
        args = (rng.standard_normal(d), np.ones(d), noise, 0.04, 12.0, d // 10)
        yield f"trajectory d={d} T={T}", "quadratic_ef_trajectory", args


def best_of(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<32} {'python ms':>10} {'cython ms':>10} {'speedup':>8}  same bits")
    for label, name, a in cases(rng):
        py = best_of(getattr(_kernels_py, name), a, args.repeat)
        if _kernels is None:
            print(f"{label:<32} {py * 1e3:10.3f} {'n/a':>10}")
            continue
        cy = best_of(getattr(_kernels, name), a, args.repeat)
        ra, rb = getattr(_kernels_py, name)(*a), getattr(_kernels, name)(*a)
        if isinstance(ra, dict):
            same = all(np.asarray(ra[key]).tobytes() == np.asarray(rb[key]).tobytes() for key in ra)
        else:
            same = np.array_equal(ra, rb)
        print(f"{label:<32} {py * 1e3:10.3f} {cy * 1e3:10.3f} {py / cy:7.1f}x  {same}")


if __name__ == "__main__":
    main()
