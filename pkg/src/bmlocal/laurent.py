"""Multivariate Laurent polynomials over Z with exact integer arithmetic.

These are elements of the group ring Z[Z^d]: finitely many terms
``coeff * e(v)`` where ``v`` is an integer exponent vector of length d
(entries may be negative).  All arithmetic is exact; coefficients are
arbitrary-precision Python integers.
"""

from __future__ import annotations

from itertools import permutations

from .errors import InexactDivision, RankMismatch

__all__ = ["LaurentPoly", "laurent_mul"]

_DIVISION_STEP_BUDGET = 200_000


class LaurentPoly:
    """A Laurent polynomial in d variables with integer coefficients.

    Stored as a map from exponent tuple to nonzero coefficient.
    Instances are immutable; all operators return new objects.
    """

    __slots__ = ("terms", "rank")

    def __init__(self, rank: int, terms=None):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        clean = {}
        if terms:
            for expo, coeff in dict(terms).items():
                expo = tuple(int(x) for x in expo)
                if len(expo) != rank:
                    raise RankMismatch(
                        f"exponent {expo} has length {len(expo)}, expected {rank}"
                    )
                coeff = int(coeff)
                if coeff != 0:
                    clean[expo] = clean.get(expo, 0) + coeff
                    if clean[expo] == 0:
                        del clean[expo]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def monomial(cls, expo, coeff: int = 1) -> "LaurentPoly":
        expo = tuple(int(x) for x in expo)
        return cls(len(expo), {expo: coeff})

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls(rank, {(0,) * rank: 1})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, expo) -> int:
        return self.terms.get(tuple(expo), 0)

    def support(self):
        return set(self.terms)

    def dim(self) -> int:
        """Sum of coefficients (the dimension of a genuine character)."""
        return sum(self.terms.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for expo in sorted(self.terms, reverse=True):
            bits.append(f"{self.terms[expo]}*e{expo}")
        return "LaurentPoly(" + " + ".join(bits) + ")"

    # -- arithmetic ----------------------------------------------------

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other) -> "LaurentPoly":
        self._check_rank(other)
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            terms[expo] = terms.get(expo, 0) + c
        return LaurentPoly(self.rank, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(
                self.rank, {e: c * other for e, c in self.terms.items()}
            )
        self._check_rank(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                terms[expo] = terms.get(expo, 0) + c1 * c2
        return LaurentPoly(self.rank, terms)

    __rmul__ = __mul__

    def scale_exponents(self, n: int) -> "LaurentPoly":
        """Apply the map e(v) -> e(n*v) to every term."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return LaurentPoly(
            self.rank,
            {tuple(n * x for x in e): c for e, c in self.terms.items()},
        )

    # -- symmetry ------------------------------------------------------

    def is_symmetric(self) -> bool:
        """True iff invariant under all permutations of the coordinates."""
        d = self.rank
        # adjacent transpositions generate S_d
        for i in range(d - 1):
            for expo, c in self.terms.items():
                swapped = list(expo)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != c:
                    return False
        return True

    def is_antisymmetric(self) -> bool:
        """True iff every adjacent transposition negates the polynomial."""
        d = self.rank
        for i in range(d - 1):
            for expo, c in self.terms.items():
                swapped = list(expo)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != -c:
                    return False
        return True

    # -- exact division -------------------------------------------------

    def divide(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; raises InexactDivision otherwise.

        Lex-leading-term reduction: at each step kill the lexicographically
        largest remainder term against the divisor's lex-largest term.  A
        step budget guards against non-exact inputs.
        """
        self._check_rank(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.rank)
        d_lead = max(divisor.terms)
        d_coeff = divisor.terms[d_lead]
        remainder = dict(self.terms)
        quotient = {}
        steps = 0
        while remainder:
            steps += 1
            if steps > _DIVISION_STEP_BUDGET:
                raise InexactDivision("step budget exceeded")
            r_lead = max(remainder)
            r_coeff = remainder[r_lead]
            if r_coeff % d_coeff != 0:
                raise InexactDivision(f"coefficient {r_coeff} not divisible by {d_coeff}")
            q_expo = tuple(a - b for a, b in zip(r_lead, d_lead))
            q_coeff = r_coeff // d_coeff
            quotient[q_expo] = quotient.get(q_expo, 0) + q_coeff
            for expo, c in divisor.terms.items():
                target = tuple(a + b for a, b in zip(q_expo, expo))
                new = remainder.get(target, 0) - q_coeff * c
                if new:
                    remainder[target] = new
                else:
                    remainder.pop(target, None)
        return LaurentPoly(self.rank, quotient)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials of equal rank."""
    return a * b


def signed_orbit_sum(v) -> LaurentPoly:
    """Sum over the symmetric group of det(w) * e(w(v)).

    Vanishes when v has a repeated entry.
    """
    v = tuple(int(x) for x in v)
    d = len(v)
    terms = {}
    for perm in permutations(range(d)):
        # parity of the permutation
        sign = 1
        seen = [False] * d
        for i in range(d):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        expo = tuple(v[perm[i]] for i in range(d))
        terms[expo] = terms.get(expo, 0) + sign
    return LaurentPoly(d, terms)
