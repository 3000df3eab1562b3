"""The character ring Z[X(T)]^W: alternating sums, Weyl characters,
decomposition into Weyl characters, and dimension evaluation.

The central identities are

    A(v)      = sum over w in S_d of det(w) e(w v),
    ch H0(w)  = A(w + rho) / A(rho)          (an exact Laurent quotient),
    dim H0(w) = prod over i < j of (w_i - w_j + j - i) / (j - i).

``decompose`` inverts the map w -> ch H0(w) on symmetric polynomials by
highest-weight peeling and works for virtual characters as well
(negative multiplicities permitted).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonTerminating
from .laurent import LaurentPoly, signed_orbit_sum
from .weights import is_dominant, rho

__all__ = [
    "Character",
    "AlternatingSum",
    "alternating_sum",
    "weyl_character",
    "weyl_dim",
    "generalized_weyl_dim",
    "decompose",
    "scale_exponents",
]

_PEEL_BUDGET = 100_000


class AlternatingSum:
    """A signed orbit sum A(v); antisymmetric under coordinate swaps."""

    __slots__ = ("poly",)

    def __init__(self, poly: LaurentPoly):
        self.poly = poly

    def __eq__(self, other):
        return isinstance(other, AlternatingSum) and self.poly == other.poly

    def __repr__(self):
        return f"AlternatingSum({self.poly!r})"


class Character:
    """A symmetric Laurent polynomial: the character of a (virtual) rep."""

    __slots__ = ("poly",)

    def __init__(self, poly: LaurentPoly, check: bool = True):
        if check and not poly.is_symmetric():
            raise ValueError("character polynomial must be symmetric")
        self.poly = poly

    @property
    def rank(self) -> int:
        return self.poly.rank

    def dim(self) -> int:
        return self.poly.dim()

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.poly * other.poly, check=False)

    def __add__(self, other: "Character") -> "Character":
        return Character(self.poly + other.poly, check=False)

    def __eq__(self, other):
        return isinstance(other, Character) and self.poly == other.poly

    def __repr__(self):
        return f"Character({self.poly!r})"


def alternating_sum(v) -> AlternatingSum:
    """A(v) = sum of det(w) e(w v); zero when v has a repeated entry."""
    return AlternatingSum(signed_orbit_sum(v))


@lru_cache(maxsize=None)
def _weyl_character_poly(w: tuple) -> LaurentPoly:
    d = len(w)
    r = rho(d)
    shifted = tuple(a + b for a, b in zip(w, r))
    numerator = signed_orbit_sum(shifted)
    denominator = signed_orbit_sum(r)
    return numerator.divide(denominator)


def weyl_character(w) -> Character:
    """ch H0(w) = A(w + rho) / A(rho) for dominant w, as an exact quotient."""
    w = tuple(int(x) for x in w)
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    return Character(_weyl_character_poly(w), check=False)


def weyl_dim(w) -> int:
    """dim H0(w) for dominant w via the product formula."""
    w = tuple(int(x) for x in w)
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    return generalized_weyl_dim(w)


def generalized_weyl_dim(v) -> int:
    """The signed dimension prod_{i<j} (v_i - v_j + j - i) / (j - i).

    For dominant v this is dim H0(v).  For arbitrary integer v it is the
    signed count matching A(v + rho): zero exactly when v + rho has a
    repeated entry, and otherwise det(w) dim H0(w(v + rho) - rho) for
    the w sorting v + rho.  This is what lets dimension bookkeeping pass
    through non-dominant shifts without special-casing.
    """
    v = tuple(int(x) for x in v)
    d = len(v)
    out = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            out *= Fraction(v[i] - v[j] + j - i, j - i)
    assert out.denominator == 1
    return int(out)


def scale_exponents(ch: Character, n: int) -> Character:
    """Apply e(v) -> e(n v) to a character; commutes with A(-) formation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Character(ch.poly.scale_exponents(n), check=False)


def decompose(ch: Character) -> dict:
    """Multiplicities m with ch = sum m(w) * weyl_character(w), exactly.

    Peels the lexicographically largest exponent (necessarily dominant
    for symmetric input) until nothing remains.  Multiplicities may be
    negative for virtual characters.
    """
    remainder = ch.poly
    rank = remainder.rank
    result = {}
    steps = 0
    while not remainder.is_zero():
        steps += 1
        if steps > _PEEL_BUDGET:
            raise NonTerminating("peeling budget exceeded (non-symmetric input?)")
        lead = max(remainder.terms)
        if not is_dominant(lead):
            raise NonTerminating(
                f"leading exponent {lead} not dominant: input not symmetric"
            )
        m = remainder.terms[lead]
        result[lead] = result.get(lead, 0) + m
        remainder = remainder - m * _weyl_character_poly(lead)
    return {w: m for w, m in result.items() if m != 0}
