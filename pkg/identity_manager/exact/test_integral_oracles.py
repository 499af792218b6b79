# -*- coding: utf-8 -*-
"""
test_integral_oracles.py
------------------------
Forme chiuse esatte degli integrali e confronto con la quadratura mpmath.
"""
from fractions import Fraction

import pytest

from identity_manager.exact.errors import QuadratureError
from identity_manager.exact.exact_arith import PiLinear
from identity_manager.exact.integral_oracles import (
    arcsin_poly_moment,
    arcsin_power_moment,
    binom_arcsin_moment_closed,
    float_sanity_check,
    gautschi_value,
    legendre_arcsin_value,
    poly_log_moment,
    power_log_moment,
)
from identity_manager.exact.legendre_poly import ExactPolynomial, legendre_via_recursion, power, shifted_legendre


def test_power_log_moment():
    assert power_log_moment(0) == 1
    assert power_log_moment(3) == Fraction(1, 16)
    with pytest.raises(ValueError):
        power_log_moment(-1)


def test_gautschi_examples():
    assert gautschi_value(0, 1) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        gautschi_value(1, 1)


@pytest.mark.parametrize("n", range(1, 16))
def test_gautschi_matches_termwise_moment(n):
    p = shifted_legendre(n)
    for m in range(n):
        assert poly_log_moment(p.shift_degree(m)) == gautschi_value(m, n)


def test_arcsin_power_moment():
    assert arcsin_power_moment(1) == PiLinear.pi_multiple(Fraction(1, 8))
    with pytest.raises(ValueError):
        arcsin_power_moment(2)


def test_legendre_arcsin_value():
    assert legendre_arcsin_value(1) == PiLinear.pi_multiple(Fraction(1, 4))
    assert legendre_arcsin_value(2).is_zero()
    with pytest.raises(ValueError):
        legendre_arcsin_value(-1)


@pytest.mark.parametrize("n", range(0, 20))
def test_arcsin_poly_moment_of_legendre(n):
    assert arcsin_poly_moment(legendre_via_recursion(n)) == legendre_arcsin_value(n)


def test_binom_arcsin_moment_closed():
    assert binom_arcsin_moment_closed(0).is_zero()
    assert binom_arcsin_moment_closed(1) == PiLinear.pi_multiple(Fraction(1, 4))
    base = ExactPolynomial((Fraction(1), Fraction(1)))
    for k in range(15):
        assert arcsin_poly_moment(power(base, k)) == binom_arcsin_moment_closed(k)


@pytest.mark.parametrize(
    "kind, params",
    [
        ("power_log_moment", {"p": 2}),
        ("gautschi_value", {"m": 1, "n": 3}),
        ("poly_log_moment", {"poly": shifted_legendre(4)}),
        ("arcsin_power_moment", {"k": 3}),
        ("binom_arcsin_moment_closed", {"k": 4}),
        ("legendre_arcsin_value", {"n": 5}),
        ("arcsin_poly_moment", {"poly": legendre_via_recursion(3)}),
        ("legendre_moment", {"mu": Fraction(3, 2), "n": 2}),
        ("legendre_moment", {"mu": Fraction(7, 3), "n": 4}),
    ],
)
def test_float_sanity(kind, params):
    assert float_sanity_check(kind, **params)


def test_float_sanity_errors():
    with pytest.raises(ValueError):
        float_sanity_check("wallis_product", n=1)
    with pytest.raises(QuadratureError):
        float_sanity_check("power_log_moment", tolerance=-1.0, p=1)
