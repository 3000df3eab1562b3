"""Benchmark the accelerated kernels against the pure-numpy fallbacks.

The package ships two implementations of its hot kernels (mod-p series
convolution and mod-p Gaussian elimination): a numba @njit version and a
pure-numpy fallback selected by BMLOCAL_PURE_NUMPY=1.  This script times
both in a single process and checks they agree.

    python3 benchmarks/bench_kernels.py [--sizes 64,256,1024] [--repeats 5]
"""

import argparse
import time

import numpy as np

from bmlocal import _kernels


def _median_time(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return sorted(times)[len(times) // 2]


def bench_poly_mul(sizes, repeats, p=5):
    rng = np.random.default_rng(0)
    rows = []
    for n in sizes:
        a = rng.integers(0, p, size=n).astype(np.int64)
        b = rng.integers(0, p, size=n).astype(np.int64)
        base = _kernels._poly_mul_mod_numpy(a, b, p, n)
        t_numpy = _median_time(
            lambda: _kernels._poly_mul_mod_numpy(a, b, p, n), repeats
        )
        if _kernels.USING_NUMBA:
            fast = _kernels._poly_mul_mod_numba(a, b, p, n)  # includes JIT warmup
            assert np.array_equal(np.asarray(fast), np.asarray(base))
            t_fast = _median_time(
                lambda: _kernels._poly_mul_mod_numba(a, b, p, n), repeats
            )
        else:
            t_fast = float("nan")
        rows.append(("poly_mul_mod", n, t_numpy, t_fast))
    return rows


def bench_gf_rank(sizes, repeats, p=5):
    rng = np.random.default_rng(1)
    rows = []
    for n in sizes:
        m = rng.integers(0, p, size=(n, n)).astype(np.int64)
        base = _kernels._gf_rank_numpy(m.copy(), p)
        t_numpy = _median_time(
            lambda: _kernels._gf_rank_numpy(m.copy(), p), repeats
        )
        if _kernels.USING_NUMBA:
            fast = int(_kernels._gf_rank_numba(m.copy(), p))
            assert fast == base
            t_fast = _median_time(
                lambda: _kernels._gf_rank_numba(m.copy(), p), repeats
            )
        else:
            t_fast = float("nan")
        rows.append(("gf_rank", n, t_numpy, t_fast))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="64,256,1024")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rank_sizes = [min(s, 512) for s in sizes]  # elimination is O(n^3)

    print(f"numba available and active: {_kernels.USING_NUMBA}")
    if not _kernels.USING_NUMBA:
        print("(set BMLOCAL_PURE_NUMPY unset / install numba to compare)")
    print(f"{'kernel':<14} {'size':>6} {'numpy (s)':>12} {'numba (s)':>12} {'speedup':>9}")
    rows = bench_poly_mul(sizes, args.repeats) + bench_gf_rank(
        rank_sizes, args.repeats
    )
    for name, n, t_numpy, t_fast in rows:
        speed = t_numpy / t_fast if t_fast == t_fast and t_fast > 0 else float("nan")
        print(f"{name:<14} {n:>6} {t_numpy:>12.6f} {t_fast:>12.6f} {speed:>8.1f}x")


if __name__ == "__main__":
    main()
