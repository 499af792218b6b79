# -*- coding: utf-8 -*-
"""
test_series_engine.py
---------------------
Serie troncate, serie generatrice di Legendre e lemma di estrazione dei coefficienti.
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from identity_manager.exact.legendre_poly import evaluate, legendre_via_recursion
from identity_manager.exact.series_engine import (
    CoefficientSequence,
    TruncatedSeries,
    generating_series,
    inverse_odd_power,
    lemma_lhs,
    lemma_rhs,
    lemma_rhs_series,
    random_sequence,
    series_inv_sqrt,
    series_inverse,
    series_mul,
    series_power,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)


def test_from_coefficients_pads_and_truncates():
    assert TruncatedSeries.from_coefficients((1, 2), 3).coefficients == (1, 2, 0, 0)
    assert TruncatedSeries.from_coefficients((1, 2, 3), 1).coefficients == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries(())


def test_order_mismatch_is_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries.from_coefficients((1,), 2) + TruncatedSeries.from_coefficients((1,), 3)


def test_inverse_of_one_plus_z():
    inv = series_inverse(TruncatedSeries.from_coefficients((1, 1), 5))
    assert inv.coefficients == (1, -1, 1, -1, 1, -1)
    with pytest.raises(ValueError):
        series_inverse(TruncatedSeries.from_coefficients((0, 1), 3))


def test_inverse_odd_power():
    # 1/(1+z)^3 = Σ (-1)^j C(j+2, 2) z^j
    assert inverse_odd_power(1, 4).coefficients == (1, -3, 6, -10, 15)


@given(st.lists(rationals, min_size=1, max_size=8))
def test_inverse_sqrt_squares_back(tail):
    f = TruncatedSeries((Fraction(1),) + tuple(tail))
    g = series_inv_sqrt(f)
    assert g[0] == 1
    assert series_mul(series_mul(g, g), f) == TruncatedSeries.from_coefficients((1,), f.order)


def test_series_power_integer_exponent():
    f = TruncatedSeries.from_coefficients((1, 1), 4)
    assert series_power(f, 2).coefficients == (1, 2, 1, 0, 0)
    with pytest.raises(ValueError):
        series_power(TruncatedSeries.from_coefficients((2, 1), 3), Fraction(1, 2))


@pytest.mark.parametrize("x", ["0", "1", "-1", "1/2", "-3/2", "3/7"])
def test_generating_series_matches_legendre(x):
    series = generating_series(x, 15)
    for n in range(16):
        assert series[n] == evaluate(legendre_via_recursion(n), x)


def test_lemma_examples():
    ones = CoefficientSequence((1, 1, 1, 1))
    assert lemma_lhs(ones, 3) == 2
    assert lemma_rhs(ones, 3) == 2
    delta = CoefficientSequence((1, 0, 0, 0))
    assert lemma_lhs(delta, 3) == -2
    assert lemma_rhs(delta, 3) == -2


def test_lemma_preconditions():
    with pytest.raises(ValueError):
        lemma_lhs(CoefficientSequence((1, 1)), 0)
    with pytest.raises(ValueError):
        lemma_rhs(CoefficientSequence((1, 1)), 3)


def test_lemma_series_coefficient():
    seq = random_sequence(random.Random(7), 12)
    series = lemma_rhs_series(seq, 11)
    assert series[11] == lemma_rhs(seq, 11)


@given(st.lists(rationals, min_size=2, max_size=14))
def test_lemma_sides_agree(values):
    seq = CoefficientSequence(tuple(values))
    for n in range(1, len(values)):
        assert lemma_lhs(seq, n) == lemma_rhs(seq, n)


def test_random_sequence_is_reproducible():
    a = random_sequence(random.Random(42), 10)
    b = random_sequence(random.Random(42), 10)
    assert a == b
    assert len(a) == 10
