"""Truncated power series over prime fields with precision tracking,
and square matrices over them carrying a global u-power denominator.

A :class:`TruncSeries` knows its coefficients mod u^M and nothing
beyond; every operation propagates the minimum precision of its inputs.
A :class:`LaurentSeriesMatrix` is u^{-k} times a matrix of integral
series, normalized by cancelling common u factors against k.
"""

from __future__ import annotations

import numpy as np

from ._kernels import poly_mul_mod
from .errors import PrecisionExhausted, SingularMatrix

__all__ = ["TruncSeries", "series_phi", "LaurentSeriesMatrix"]

MIN_PRECISION = 1


class TruncSeries:
    """An element of F_p[u]/u^M with the precision M carried along."""

    __slots__ = ("coeffs", "prec", "p")

    def __init__(self, coeffs, prec: int, p: int, q: int | None = None):
        if q is not None and q != p:
            raise ValueError("only prime fields are supported (q must equal p)")
        if prec < MIN_PRECISION:
            raise PrecisionExhausted(f"precision {prec} below floor {MIN_PRECISION}")
        arr = np.zeros(prec, dtype=np.int64)
        coeffs = np.asarray(list(coeffs), dtype=np.int64)
        n = min(prec, coeffs.shape[0])
        arr[:n] = coeffs[:n] % p
        self.coeffs = arr
        self.prec = prec
        self.p = p

    @property
    def q(self) -> int:
        return self.p

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, prec: int, p: int) -> "TruncSeries":
        return cls([], prec, p)

    @classmethod
    def one(cls, prec: int, p: int) -> "TruncSeries":
        return cls([1], prec, p)

    @classmethod
    def monomial(cls, k: int, prec: int, p: int, coeff: int = 1) -> "TruncSeries":
        c = np.zeros(prec, dtype=np.int64)
        if k < prec:
            c[k] = coeff % p
        return cls(c, prec, p)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        """True iff all *known* coefficients vanish."""
        return not self.coeffs.any()

    def valuation(self):
        """Index of the first nonzero known coefficient; None if all vanish."""
        nz = np.flatnonzero(self.coeffs)
        return int(nz[0]) if nz.size else None

    def is_unit(self) -> bool:
        return int(self.coeffs[0]) != 0

    def __eq__(self, other) -> bool:
        """Equality up to the minimum of the two precisions."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.p != other.p:
            return False
        m = min(self.prec, other.prec)
        return bool(np.array_equal(self.coeffs[:m], other.coeffs[:m]))

    def eq_mod(self, other: "TruncSeries", k: int) -> bool:
        """Equality of the first k coefficients (requires precision >= k)."""
        m = min(self.prec, other.prec)
        if m < k:
            raise PrecisionExhausted(f"need precision {k}, have {m}")
        return bool(np.array_equal(self.coeffs[:k], other.coeffs[:k]))

    def __repr__(self):
        nz = np.flatnonzero(self.coeffs)
        if not nz.size:
            return f"TruncSeries(0 + O(u^{self.prec}), p={self.p})"
        bits = [f"{int(self.coeffs[i])}*u^{i}" for i in nz[:6]]
        if nz.size > 6:
            bits.append("...")
        return f"TruncSeries({' + '.join(bits)} + O(u^{self.prec}), p={self.p})"

    # -- arithmetic ---------------------------------------------------------

    def _common(self, other: "TruncSeries") -> int:
        if self.p != other.p:
            raise ValueError("mixed characteristics")
        return min(self.prec, other.prec)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        m = self._common(other)
        return TruncSeries((self.coeffs[:m] + other.coeffs[:m]) % self.p, m, self.p)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        m = self._common(other)
        return TruncSeries((self.coeffs[:m] - other.coeffs[:m]) % self.p, m, self.p)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries((-self.coeffs) % self.p, self.prec, self.p)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, int):
            return TruncSeries((self.coeffs * (other % self.p)) % self.p,
                               self.prec, self.p)
        m = self._common(other)
        return TruncSeries(poly_mul_mod(self.coeffs, other.coeffs, self.p, m),
                           m, self.p)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by u^k (k >= 0): precision is preserved as written."""
        if k < 0:
            raise ValueError("use divide_u for negative shifts")
        c = np.zeros(self.prec, dtype=np.int64)
        c[k:] = self.coeffs[: max(self.prec - k, 0)]
        return TruncSeries(c, self.prec, self.p)

    def divide_u(self, k: int) -> "TruncSeries":
        """Exact division by u^k; requires the low k coefficients to vanish.

        The result is only known mod u^{prec-k}.
        """
        if k == 0:
            return self
        if self.coeffs[:k].any():
            raise ValueError(f"not divisible by u^{k}")
        return TruncSeries(self.coeffs[k:], self.prec - k, self.p)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse of a unit series, to the same precision."""
        if not self.is_unit():
            raise ZeroDivisionError("not a unit series (zero constant term)")
        p, m = self.p, self.prec
        inv0 = pow(int(self.coeffs[0]), p - 2, p)
        out = np.zeros(m, dtype=np.int64)
        out[0] = inv0
        for k in range(1, m):
            acc = 0
            top = min(k, m - 1)
            for i in range(1, top + 1):
                acc += int(self.coeffs[i]) * int(out[k - i])
            out[k] = (-inv0 * acc) % p
        return TruncSeries(out, m, self.p)

    def truncate(self, prec: int) -> "TruncSeries":
        if prec > self.prec:
            raise PrecisionExhausted(f"cannot extend precision {self.prec} to {prec}")
        return TruncSeries(self.coeffs[:prec], prec, self.p)


def series_phi(s: TruncSeries, working_modulus: int | None = None) -> TruncSeries:
    """The Frobenius substitution u -> u^p on a truncated series.

    A series known mod u^M determines its image mod u^{pM}; the result
    carries precision min(p*M, working_modulus).
    """
    p = s.p
    new_prec = p * s.prec
    if working_modulus is not None:
        new_prec = min(new_prec, working_modulus)
    out = np.zeros(new_prec, dtype=np.int64)
    top = min(s.prec, (new_prec + p - 1) // p)
    for i in range(top):
        if i * p < new_prec:
            out[i * p] = s.coeffs[i]
    return TruncSeries(out, new_prec, p)


class LaurentSeriesMatrix:
    """A d x d matrix u^{-k} * N with N integral TruncSeries entries.

    Normalization divides common u factors of N into k, so k = 0 exactly
    when the matrix is integral (within precision).
    """

    __slots__ = ("num", "denom_exponent", "d", "p")

    def __init__(self, num, denom_exponent: int = 0, normalize: bool = True):
        self.num = [list(row) for row in num]
        self.d = len(self.num)
        for row in self.num:
            if len(row) != self.d:
                raise ValueError("matrix must be square")
        self.p = self.num[0][0].p
        self.denom_exponent = int(denom_exponent)
        if normalize:
            self._normalize()

    def _normalize(self):
        while self.denom_exponent > 0 and all(
            s.coeffs[0] == 0 for row in self.num for s in row
        ):
            self.num = [[s.divide_u(1) for s in row] for row in self.num]
            self.denom_exponent -= 1

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, d: int, prec: int, p: int) -> "LaurentSeriesMatrix":
        num = [
            [TruncSeries.one(prec, p) if i == j else TruncSeries.zero(prec, p)
             for j in range(d)]
            for i in range(d)
        ]
        return cls(num, 0)

    @property
    def prec(self) -> int:
        return min(s.prec for row in self.num for s in row)

    def entry(self, i: int, j: int) -> TruncSeries:
        """The (i, j) entry as a series (requires integrality, k = 0)."""
        if self.denom_exponent != 0:
            raise ValueError("matrix has a denominator; use num/denom directly")
        return self.num[i][j]

    def is_integral(self) -> bool:
        return self.denom_exponent == 0

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other: "LaurentSeriesMatrix") -> "LaurentSeriesMatrix":
        if self.d != other.d:
            raise ValueError("size mismatch")
        d = self.d
        num = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = None
                for l in range(d):
                    term = self.num[i][l] * other.num[l][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            num.append(row)
        return LaurentSeriesMatrix(
            num, self.denom_exponent + other.denom_exponent
        )

    def __sub__(self, other: "LaurentSeriesMatrix") -> "LaurentSeriesMatrix":
        a, b = self, other
        # bring to a common denominator exponent
        k = max(a.denom_exponent, b.denom_exponent)
        num = [
            [
                a.num[i][j].shift(k - a.denom_exponent)
                - b.num[i][j].shift(k - b.denom_exponent)
                for j in range(a.d)
            ]
            for i in range(a.d)
        ]
        return LaurentSeriesMatrix(num, k)

    def scalar_mul(self, s: TruncSeries) -> "LaurentSeriesMatrix":
        num = [[e * s for e in row] for row in self.num]
        return LaurentSeriesMatrix(num, self.denom_exponent)

    def det(self) -> TruncSeries:
        """Determinant of the numerator (cofactor expansion, small d)."""
        return _det(self.num)

    def inverse(self) -> "LaurentSeriesMatrix":
        """Inverse over F_p((u)): adjugate divided by det = u^m * unit."""
        det = _det(self.num)
        v = det.valuation()
        if v is None:
            raise SingularMatrix("determinant vanishes within precision")
        unit = det.divide_u(v)
        unit_inv = unit.inverse()
        adj = _adjugate(self.num)
        # (u^{-k} N)^{-1} = u^{k} adj(N) / det(N) = adj(N) * unit_inv * u^{k - v}
        num = [[e * unit_inv for e in row] for row in adj]
        shift = self.denom_exponent - v
        if shift >= 0:
            num = [[e.shift(shift) for e in row] for row in num]
            return LaurentSeriesMatrix(num, 0)
        return LaurentSeriesMatrix(num, -shift)

    def phi(self, working_modulus: int | None = None) -> "LaurentSeriesMatrix":
        """Entrywise Frobenius u -> u^p; the denominator u^{-k} maps to u^{-pk}."""
        num = [[series_phi(e, working_modulus) for e in row] for row in self.num]
        return LaurentSeriesMatrix(num, self.p * self.denom_exponent)

    # -- predicates ---------------------------------------------------------

    def eq_mod(self, other: "LaurentSeriesMatrix", k: int) -> bool:
        diff = self - other
        if diff.denom_exponent > 0:
            return False
        return all(
            not e.coeffs[: min(k, e.prec)].any()
            and e.prec >= k
            for row in diff.num
            for e in row
        )

    def is_one_mod(self, N: int) -> bool:
        """True iff the matrix is integral and congruent to 1 mod u^N."""
        if self.denom_exponent != 0:
            return False
        for i in range(self.d):
            for j in range(self.d):
                e = self.num[i][j]
                if e.prec < N:
                    raise PrecisionExhausted(f"need precision {N}")
                want = np.zeros(N, dtype=np.int64)
                if i == j:
                    want[0] = 1
                if not np.array_equal(e.coeffs[:N], want):
                    return False
        return True


def _det(m) -> TruncSeries:
    d = len(m)
    if d == 1:
        return m[0][0]
    acc = None
    for j in range(d):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def _adjugate(m):
    d = len(m)
    if d == 1:
        one = TruncSeries.one(m[0][0].prec, m[0][0].p)
        return [[one]]
    adj = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            minor = [
                [m[r][c] for c in range(d) if c != j]
                for r in range(d)
                if r != i
            ]
            cof = _det(minor)
            if (i + j) % 2 == 1:
                cof = -cof
            adj[j][i] = cof
    return adj
