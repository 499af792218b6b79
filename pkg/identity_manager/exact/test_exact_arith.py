# -*- coding: utf-8 -*-
"""
test_exact_arith.py
-------------------
Scalari razionali, primitive combinatorie e anello Q ⊕ Q·π.
"""
import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from identity_manager.exact.exact_arith import (
    PiLinear,
    binomial,
    double_factorial,
    format_exact,
    format_rational,
    parse_exact,
    pochhammer_rising,
    to_rational,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=30)


def test_to_rational_accepts_exact_inputs():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(4) == Fraction(4)
    assert to_rational(Fraction(-2, 3)) == Fraction(-2, 3)


@pytest.mark.parametrize("value", [0.5, True, None])
def test_to_rational_rejects_inexact(value):
    with pytest.raises(TypeError):
        to_rational(value)


def test_format_rational_always_has_denominator():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-2, 4)) == "-1/2"


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=0, max_value=60))
def test_pascal_rule(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_double_factorial():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_pochhammer():
    assert pochhammer_rising(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer_rising(7, 0) == 1
    assert pochhammer_rising(-2, 3) == 0
    with pytest.raises(ValueError):
        pochhammer_rising(1, -1)


@given(rationals, st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
def test_pochhammer_splits(x, m, n):
    assert pochhammer_rising(x, m + n) == pochhammer_rising(x, m) * pochhammer_rising(x + m, n)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a + b - b == a
    if b:
        assert a / b * b == a


# -----------------------------------------------------------------------------
# PiLinear
# -----------------------------------------------------------------------------
pilinears = st.builds(PiLinear, rationals, rationals)


def test_pilinear_str_and_parse():
    value = PiLinear(1, -2)
    assert str(value) == "1/1 - 2/1*pi"
    assert PiLinear.parse(str(value)) == value
    assert PiLinear.parse("-3/4 + 1/8*pi") == PiLinear(Fraction(-3, 4), Fraction(1, 8))
    with pytest.raises(ValueError):
        PiLinear.parse("pi/4")


@given(pilinears)
def test_pilinear_parse_inverts_str(value):
    assert PiLinear.parse(str(value)) == value


@given(pilinears, pilinears, rationals)
def test_pilinear_module_laws(u, v, c):
    assert (u + v) * c == u * c + v * c
    assert c * u == u * c
    assert u - u == PiLinear()
    assert (u - v) + v == u


def test_pilinear_rejects_pi_squared():
    with pytest.raises(ValueError):
        PiLinear.pi_multiple(1) * PiLinear.pi_multiple(2)
    assert PiLinear(2, 0) * PiLinear.pi_multiple(3) == PiLinear(0, 6)


def test_pilinear_equality_with_rationals():
    assert PiLinear(3, 0) == Fraction(3)
    assert hash(PiLinear(3, 0)) == hash(Fraction(3)) == hash(3)
    assert len({PiLinear(3, 0), Fraction(3), 3}) == 1
    assert len({PiLinear(3, 1), Fraction(3)}) == 2
    assert PiLinear(3, 1) != 3
    assert hash(PiLinear(1, 2)) == hash(PiLinear(Fraction(2, 2), 2))
    assert PiLinear().is_zero()


def test_pilinear_is_immutable_and_picklable():
    value = PiLinear(Fraction(1, 3), Fraction(-5, 7))
    with pytest.raises(AttributeError):
        value.foo = 1
    assert pickle.loads(pickle.dumps(value)) == value


def test_format_and_parse_exact():
    assert format_exact(Fraction(1, 2)) == "1/2"
    assert format_exact(PiLinear.pi_multiple(Fraction(1, 8))) == "0/1 + 1/8*pi"
    assert parse_exact("1/2") == Fraction(1, 2)
    assert parse_exact("0/1 + 1/8*pi") == PiLinear.pi_multiple(Fraction(1, 8))


@given(rationals)
def test_pilinear_hash_matches_rational(value):
    assert hash(PiLinear(value, 0)) == hash(value)


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/2.0", "abc", "1/0", "1/0 + 1/8*pi"])
def test_parse_exact_rejects_inexact_text(text):
    with pytest.raises(ValueError):
        parse_exact(text)
