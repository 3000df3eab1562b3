"""Hot numeric kernels: mod-p series convolution and mod-p elimination.

Two implementations are provided for each kernel:

* a numba ``@njit`` version (default when numba imports cleanly), and
* a pure-numpy fallback.

Set the environment variable ``BMLOCAL_PURE_NUMPY=1`` before import to
force the fallback.  ``benchmarks/bench_kernels.py`` compares the two.

All inputs are int64 numpy arrays with entries already reduced mod p.
Coefficients stay well inside int64: lengths are <= a few hundred and
p is a small prime, so intermediate dot products are bounded by
len * (p-1)^2 << 2^63.
"""

import os

import numpy as np

__all__ = ["poly_mul_mod", "gf_rank", "USING_NUMBA"]


def _poly_mul_mod_numpy(a, b, p, n):
    """Coefficients 0..n-1 of a*b mod p (full convolution, then truncate)."""
    c = np.convolve(a, b)[:n] % p
    out = np.zeros(n, dtype=np.int64)
    out[: c.shape[0]] = c
    return out


def _gf_rank_numpy(mat, p):
    """Rank of a matrix over F_p by vectorized row elimination."""
    m = mat % p
    rows, cols = m.shape
    rank = 0
    for j in range(cols):
        piv = -1
        for i in range(rank, rows):
            if m[i, j] % p != 0:
                piv = i
                break
        if piv < 0:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, j]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        mask = np.arange(rows) != rank
        factors = m[:, j].copy()
        factors[~mask] = 0
        m = (m - np.outer(factors, m[rank])) % p
        rank += 1
        if rank == rows:
            break
    return rank


_force_numpy = os.environ.get("BMLOCAL_PURE_NUMPY", "") == "1"

USING_NUMBA = False
if not _force_numpy:
    try:
        from numba import njit

        @njit(cache=True)
        def _poly_mul_mod_numba(a, b, p, n):  # pragma: no cover - jitted
            out = np.zeros(n, dtype=np.int64)
            la = a.shape[0]
            lb = b.shape[0]
            for i in range(min(la, n)):
                ai = a[i]
                if ai == 0:
                    continue
                top = min(lb, n - i)
                for j in range(top):
                    out[i + j] = (out[i + j] + ai * b[j]) % p
            return out

        @njit(cache=True)
        def _gf_rank_numba(mat, p):  # pragma: no cover - jitted
            m = mat.copy() % p
            rows, cols = m.shape
            rank = 0
            for j in range(cols):
                piv = -1
                for i in range(rank, rows):
                    if m[i, j] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for k in range(cols):
                        tmp = m[rank, k]
                        m[rank, k] = m[piv, k]
                        m[piv, k] = tmp
                # inverse of the pivot by Fermat
                inv = 1
                base = m[rank, j] % p
                exp = p - 2
                while exp > 0:
                    if exp & 1:
                        inv = (inv * base) % p
                    base = (base * base) % p
                    exp >>= 1
                for k in range(cols):
                    m[rank, k] = (m[rank, k] * inv) % p
                for i in range(rows):
                    if i != rank and m[i, j] != 0:
                        f = m[i, j]
                        for k in range(cols):
                            m[i, k] = (m[i, k] - f * m[rank, k]) % p
                rank += 1
                if rank == rows:
                    break
            return rank

        USING_NUMBA = True
    except Exception:  # numba unavailable or broken: fall back silently
        USING_NUMBA = False


def poly_mul_mod(a, b, p, n):
    """First n coefficients of the product of coefficient arrays a, b mod p."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    if USING_NUMBA:
        return _poly_mul_mod_numba(a, b, p, n)
    return _poly_mul_mod_numpy(a, b, p, n)


def gf_rank(mat, p):
    """Rank over F_p of an integer matrix."""
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    if USING_NUMBA:
        return int(_gf_rank_numba(mat, p))
    return int(_gf_rank_numpy(mat, p))
