"""Tame local-field arithmetic: exact valuations, units, inverses."""

import random
from fractions import Fraction

import pytest

from bmlocal.errors import IndeterminateValuation, WildRamification
from bmlocal.localfield import TameFieldContext, lf_valuation


def test_wild_ramification_refused():
    with pytest.raises(WildRamification):
        TameFieldContext(5, 10)  # p | e


def test_basic_valuations():
    ctx = TameFieldContext(5, 2, prec=40)
    assert ctx.pi().valuation() == 1
    assert ctx.from_rational(5).valuation() == 2  # v(p) = e
    assert ctx.from_rational(Fraction(1, 5)).valuation() == -2
    assert ctx.from_rational(3).valuation() == 0
    two_pi = ctx.from_rational(2) * ctx.pi()
    assert two_pi.valuation() == 1


def test_valuation_is_multiplicative():
    rng = random.Random(31)
    ctx = TameFieldContext(5, 2, prec=60)
    elems = []
    for _ in range(20):
        a = ctx.from_rational(rng.randint(1, 20))
        b = ctx.pi()
        for _ in range(rng.randint(0, 3)):
            a = a * b
        if rng.random() < 0.5:
            a = a * ctx.zeta()
        elems.append(a)
    for _ in range(200):
        x, y = rng.choice(elems), rng.choice(elems)
        assert (x * y).valuation() == x.valuation() + y.valuation()


def test_pi_power_e_is_p_times_unit():
    for p, e in [(5, 2), (7, 3), (5, 4), (7, 2)]:
        ctx = TameFieldContext(p, e, prec=6 * e)
        pie = ctx.one()
        for _ in range(e):
            pie = pie * ctx.pi()
        ratio = pie * ctx.from_rational(Fraction(1, p))
        assert ratio.valuation() == 0


def test_zeta_has_order_e():
    ctx = TameFieldContext(7, 3, prec=30)
    z = ctx.zeta()
    acc = ctx.one()
    for _ in range(3):
        acc = acc * z
    assert (acc - ctx.one()).is_zero_to_precision()


def test_conjugates_are_distinct():
    ctx = TameFieldContext(5, 2, prec=40)
    d = ctx.pi_conjugate(0) - ctx.pi_conjugate(1)
    assert d.valuation() == 1  # 2 pi, a unit times pi


def test_inverse():
    ctx = TameFieldContext(5, 2, prec=40)
    for x in [ctx.pi(), ctx.from_rational(3), ctx.pi() * ctx.from_rational(7)]:
        y = x.inverse()
        assert ((x * y) - ctx.one()).is_zero_to_precision()
        assert y.valuation() == -x.valuation()


def test_indeterminate_valuation():
    ctx = TameFieldContext(5, 2, prec=4)
    # all coordinates vanish within precision: nothing to certify
    diff = ctx.pi() - ctx.pi()
    with pytest.raises(IndeterminateValuation):
        diff.valuation()
    # nonzero coordinates, but the valuation bound meets the window
    deep = ctx.element({(0, 0): Fraction(5**3)}, prec=4)
    with pytest.raises(IndeterminateValuation):
        deep.valuation()


def test_lf_valuation_helper():
    ctx = TameFieldContext(5, 2, prec=40)
    assert lf_valuation(ctx.pi() * ctx.pi()) == 2
