"""The accelerated kernels agree with the pure-numpy fallbacks."""

import numpy as np

from bmlocal import _kernels


def test_poly_mul_mod_matches_fallback():
    rng = np.random.default_rng(0)
    for p in (2, 3, 5):
        for _ in range(20):
            n = int(rng.integers(1, 40))
            a = rng.integers(0, p, size=n).astype(np.int64)
            b = rng.integers(0, p, size=n).astype(np.int64)
            fast = _kernels.poly_mul_mod(a, b, p, n)
            slow = _kernels._poly_mul_mod_numpy(a, b, p, n)
            assert np.array_equal(np.asarray(fast), np.asarray(slow))


def test_poly_mul_mod_oracle():
    # multiply (1 + u)(1 + u + u^2) = 1 + 2u + 2u^2 + u^3 mod 5, truncated
    a = np.array([1, 1, 0, 0], dtype=np.int64)
    b = np.array([1, 1, 1, 0], dtype=np.int64)
    got = np.asarray(_kernels.poly_mul_mod(a, b, 5, 4))
    assert got.tolist() == [1, 2, 2, 1]


def test_gf_rank_matches_fallback_and_oracle():
    rng = np.random.default_rng(1)
    for p in (2, 3, 5):
        for _ in range(20):
            rows = int(rng.integers(1, 8))
            cols = int(rng.integers(1, 8))
            m = rng.integers(0, p, size=(rows, cols)).astype(np.int64)
            fast = _kernels.gf_rank(m.copy(), p)
            slow = _kernels._gf_rank_numpy(m.copy(), p)
            assert fast == slow
    # oracle: second row is twice the first mod 3
    m = np.array([[1, 2, 0], [2, 1, 0], [0, 0, 1]], dtype=np.int64)
    assert _kernels.gf_rank(m, 3) == 2


def test_singular_matrix_rank():
    m = np.array([[1, 2], [2, 4]], dtype=np.int64)
    assert _kernels.gf_rank(m, 5) == 1
