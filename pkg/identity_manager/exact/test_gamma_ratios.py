# -*- coding: utf-8 -*-
from fractions import Fraction
from math import comb

import pytest

from identity_manager.exact.gamma_ratios import MuParameter, gamma_ratio_A, legendre_moment, theorem33_rhs


def test_mu_must_be_positive():
    assert MuParameter("1/2").mu == Fraction(1, 2)
    with pytest.raises(ValueError):
        MuParameter(0)
    with pytest.raises(ValueError):
        gamma_ratio_A(Fraction(-1, 2), 1)


def test_gamma_ratio_small_values():
    assert gamma_ratio_A(Fraction(1, 2), 0) == 2
    assert gamma_ratio_A(2, 1) == Fraction(1, 6)
    # μ intero <= n: 1/Γ(μ-n) si annulla
    assert gamma_ratio_A(2, 3) == 0


def test_theorem33_examples():
    assert theorem33_rhs(1, 1) == Fraction(1, 4)
    assert theorem33_rhs(2, 1) == Fraction(1, 12)
    with pytest.raises(ValueError):
        theorem33_rhs(1, 0)


@pytest.mark.parametrize("n", range(1, 16))
def test_integer_mu_closed_forms(n):
    sign = (-1) ** (n + 1)
    assert 2 * theorem33_rhs(n, n) == Fraction(sign, n * n * comb(2 * n, n))
    assert 2 * theorem33_rhs(n + 1, n) == Fraction(sign, (2 * n + 1) * comb(2 * n, n))


@pytest.mark.parametrize("n", range(1, 12))
def test_half_integer_mu_closed_forms(n):
    assert theorem33_rhs(Fraction(1, 2), n) == Fraction(2, (2 * n - 1) * (2 * n + 1))
    assert theorem33_rhs(Fraction(3, 2), n) == Fraction(-2, (2 * n - 3) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3))


@pytest.mark.parametrize("mu", [Fraction(1, 2), Fraction(3, 2), Fraction(7, 3), Fraction(5), Fraction(1), Fraction(4)])
def test_legendre_moment_matches_gamma_ratio(mu):
    for n in range(0, 12):
        assert 2 * legendre_moment(mu, n) == gamma_ratio_A(mu, n)
