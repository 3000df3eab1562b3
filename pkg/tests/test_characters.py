"""Weyl characters: dimension oracles, tensor products, decomposition."""

import math
import random

import pytest

from bmlocal.characters import (
    decompose,
    generalized_weyl_dim,
    weyl_character,
    weyl_dim,
)
from bmlocal.errors import NonTerminating


def sl2_dim(a, b):
    return a - b + 1


def test_dimension_oracle_gl2():
    for a in range(6):
        for b in range(a + 1):
            ch = weyl_character((a, b))
            assert ch.dim() == sl2_dim(a, b) == weyl_dim((a, b))


def test_dimension_oracle_gl3():
    # Weyl dimension formula for GL_3
    for w in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0), (3, 1, 0)]:
        a, b, c = w
        want = (a - b + 1) * (b - c + 1) * (a - c + 2) // 2
        assert weyl_dim(w) == want
        assert weyl_character(w).dim() == want


def test_character_symmetry_and_central_twist():
    ch = weyl_character((3, 1))
    assert ch.poly.is_symmetric()
    # tensoring with det shifts every exponent by one
    det = weyl_character((1, 1))
    assert ch * det == weyl_character((4, 2))


def test_clebsch_gordan_small():
    got = decompose(weyl_character((2, 0)) * weyl_character((1, 0)))
    assert got == {(3, 0): 1, (2, 1): 1}


def test_decompose_round_trip_random():
    rng = random.Random(11)
    for _ in range(15):
        a = (rng.randint(0, 5), 0)
        b = (rng.randint(0, 5), rng.randint(-2, 0))
        b = (max(b), min(b))
        prod = weyl_character(a) * weyl_character(b)
        mult = decompose(prod)
        rebuilt = None
        for lam, m in mult.items():
            term = weyl_character(lam)
            for _ in range(m - 1):
                term = term + weyl_character(lam)
            rebuilt = term if rebuilt is None else rebuilt + term
        assert rebuilt == prod
        # dimension bookkeeping
        assert sum(m * weyl_dim(l) for l, m in mult.items()) == prod.dim()


def test_generalized_dim_vanishes_on_walls():
    # a rho-shift landing on a wall gives zero
    assert generalized_weyl_dim((0, 1)) == 0


def test_generalized_dim_sign():
    # reflecting across a wall flips the sign
    assert generalized_weyl_dim((0, 2)) == -generalized_weyl_dim((1, 1))


def test_decompose_rejects_non_symmetric():
    from bmlocal.characters import Character
    from bmlocal.laurent import LaurentPoly

    bad = LaurentPoly.monomial((0, 1))  # not symmetric
    with pytest.raises(ValueError):
        Character(bad)
    with pytest.raises(NonTerminating):
        decompose(Character(bad, check=False))
