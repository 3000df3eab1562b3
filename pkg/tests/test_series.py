"""Truncated power series over F_p: precision tracking, units, Frobenius."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmlocal.errors import PrecisionExhausted
from bmlocal.series import LaurentSeriesMatrix, TruncSeries, series_phi

P = 5
PREC = 16


def series_strategy():
    return st.lists(
        st.integers(0, P - 1), min_size=1, max_size=PREC
    ).map(lambda cs: TruncSeries(cs, PREC, P))


@given(series_strategy(), series_strategy(), series_strategy())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncSeries.zero(PREC, P)


@given(series_strategy(), series_strategy())
@settings(max_examples=40, deadline=None)
def test_phi_is_a_ring_homomorphism(a, b):
    cap = PREC
    assert series_phi(a * b, cap) == series_phi(a, cap) * series_phi(b, cap)
    assert series_phi(a + b, cap) == series_phi(a, cap) + series_phi(b, cap)


def test_phi_sends_u_to_u_power_p():
    u = TruncSeries.monomial(1, PREC, P)
    assert series_phi(u, PREC) == TruncSeries.monomial(P, PREC, P)


def test_phi_recovers_precision():
    s = TruncSeries([1, 2], 3, P)
    assert series_phi(s, 64).prec == min(P * 3, 64)


def test_valuation_and_unit():
    s = TruncSeries([0, 0, 3, 1], PREC, P)
    assert s.valuation() == 2
    assert not s.is_unit()
    assert TruncSeries([2, 0, 1], PREC, P).is_unit()


def test_inverse_of_unit():
    s = TruncSeries([1, 3, 0, 2], PREC, P)
    assert s * s.inverse() == TruncSeries.one(PREC, P)


def test_precision_floor():
    with pytest.raises(PrecisionExhausted):
        TruncSeries([0, 0], 2, P).divide_u(2)  # no known coefficients left
    with pytest.raises(ValueError):
        TruncSeries([1, 1], 2, P).divide_u(1)  # not divisible


def test_multiplication_tracks_min_precision():
    a = TruncSeries([1, 1], 4, P)
    b = TruncSeries([1, 2, 3], 7, P)
    assert (a * b).prec == 4


def _mat(entries, k=0):
    num = [[TruncSeries(c, PREC, P) for c in row] for row in entries]
    return LaurentSeriesMatrix(num, k)


def test_matrix_inverse_round_trip():
    m = _mat([[[1, 2], [0, 1]], [[0, 3], [1, 0, 4]]])
    prod = m * m.inverse()
    ident = LaurentSeriesMatrix.identity(2, PREC, P)
    assert prod.eq_mod(ident, prod.prec - prod.denom_exponent)


def test_matrix_denominator_normalization():
    # u * I with denominator u cancels back to I
    num = [
        [TruncSeries([0, 1], PREC, P), TruncSeries.zero(PREC, P)],
        [TruncSeries.zero(PREC, P), TruncSeries([0, 1], PREC, P)],
    ]
    m = LaurentSeriesMatrix(num, 1)
    assert m.denom_exponent == 0
    assert m.eq_mod(LaurentSeriesMatrix.identity(2, PREC, P), PREC - 1)


def test_is_one_mod():
    m = _mat([[[1, 0, 0, 2], [0, 0, 1]], [[0], [1, 0, 3]]])
    assert m.is_one_mod(2)
    assert not m.is_one_mod(3)
