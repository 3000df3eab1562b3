"""Hilbert-defect machinery: exact shifted identities, finite-difference
degree bounds, and the equality-forcing degree-jump detector.

For a list of dominant weights mu_i and multiplicities m(lam) obtained by
decomposing the tensor product of the shifted characters, two facts are
verified on exact integer samples:

* the shifted identity
    prod_i dim H0(n mu_i - rho)
        = sum_lam m(lam) dim H0(n(lam+rho) - rho) * dim H0(n rho - rho)^(e-1)
  holds exactly for every n >= 1;
* the unshifted defect
    D(n) = prod_i dim H0(n mu_i) - sum_lam m(lam) dim H0(n(lam+rho)) * dim H0(n rho)^(e-1)
  is a polynomial in n of degree strictly less than sum_i flag_dim(mu_i).

All dimensions of possibly non-dominant arguments go through the signed
product formula, so vanishing alternating sums are handled uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import generalized_weyl_dim
from .errors import WindowTooShort
from .weights import flag_dim, rho

__all__ = [
    "DefectSeries",
    "dim_product",
    "shifted_identity_check",
    "defect_degree",
    "equality_forcing_check",
]


@dataclass(frozen=True)
class DefectSeries:
    """Exact integer samples (n, D(n)) with a claimed degree bound."""

    values: tuple  # tuple of (n, D(n)) pairs at consecutive n
    claimed_degree_bound: int

    def finite_difference_degree(self) -> int:
        """Degree certified by iterated finite differences; -1 for zero."""
        samples = [v for _, v in self.values]
        degree = -1
        order = 0
        while any(samples):
            if len(samples) == 1:
                # nonzero but exhausted: window could not certify
                raise WindowTooShort("window exhausted before differences vanished")
            degree = order
            samples = [b - a for a, b in zip(samples, samples[1:])]
            order += 1
        return degree


def dim_product(mu_list, n: int, shift: str = "none") -> int:
    """prod_i dim H0(n mu_i) (or of n mu_i - rho when shift='minus_rho'),
    evaluated through the signed product formula."""
    if shift not in ("none", "minus_rho"):
        raise ValueError(f"unknown shift {shift!r}")
    out = 1
    for mu in mu_list:
        mu = tuple(int(x) for x in mu)
        v = tuple(n * x for x in mu)
        if shift == "minus_rho":
            r = rho(len(mu))
            v = tuple(a - b for a, b in zip(v, r))
        out *= generalized_weyl_dim(v)
    return out


def _rhs(mu_list, mult: dict, n: int, shift: str) -> int:
    d = len(next(iter(mu_list)))
    e = len(mu_list)
    r = rho(d)
    total = 0
    for lam, m in mult.items():
        lam = tuple(int(x) for x in lam)
        lam_rho = tuple(a + b for a, b in zip(lam, r))
        total += (
            m
            * dim_product([lam_rho], n, shift)
            * dim_product([r], n, shift) ** (e - 1)
        )
    return total


def shifted_identity_check(mu_list, mult: dict, n_max: int):
    """Verify the shifted identity exactly for n = 1..n_max.

    Returns (True, None) or (False, first failing n).
    """
    for n in range(1, n_max + 1):
        lhs = dim_product(mu_list, n, "minus_rho")
        rhs = _rhs(mu_list, mult, n, "minus_rho")
        if lhs != rhs:
            return False, n
    return True, None


def defect_values(mu_list, mult: dict, n_range) -> list:
    """Exact unshifted defect samples D(n) over n_range."""
    return [
        (n, dim_product(mu_list, n, "none") - _rhs(mu_list, mult, n, "none"))
        for n in n_range
    ]


def defect_degree(mu_list, mult: dict, n_range=None):
    """DefectSeries plus the fitted degree; pass iff degree < sum flag_dim.

    Returns (series, degree, passed).
    """
    bound = sum(flag_dim(tuple(mu)) for mu in mu_list)
    if n_range is None:
        n_range = range(1, bound + 5)
    n_range = list(n_range)
    if len(n_range) < bound + 3:
        raise WindowTooShort(
            f"need at least {bound + 3} samples for claimed bound {bound}"
        )
    series = DefectSeries(
        values=tuple(defect_values(mu_list, mult, n_range)),
        claimed_degree_bound=bound,
    )
    degree = series.finite_difference_degree()
    return series, degree, degree < bound


def equality_forcing_check(mu_list, mult: dict, overcount: dict, n_range=None) -> bool:
    """True iff inflating the multiplicities by ``overcount`` pushes the
    defect degree up to (at least) sum flag_dim — i.e. the overcount is
    detected by the degree bound."""
    if not any(x > 0 for x in overcount.values()):
        raise ValueError("overcount must have some positive entry")
    if any(x < 0 for x in overcount.values()):
        raise ValueError("overcount entries must be >= 0")
    inflated = dict(mult)
    for lam, extra in overcount.items():
        lam = tuple(int(x) for x in lam)
        inflated[lam] = inflated.get(lam, 0) + extra
    bound = sum(flag_dim(tuple(mu)) for mu in mu_list)
    if n_range is None:
        n_range = range(1, bound + 5)
    n_range = list(n_range)
    if len(n_range) < bound + 3:
        raise WindowTooShort(
            f"need at least {bound + 3} samples for claimed bound {bound}"
        )
    series = DefectSeries(
        values=tuple(defect_values(mu_list, inflated, n_range)),
        claimed_degree_bound=bound,
    )
    return series.finite_difference_degree() >= bound
