# -*- coding: utf-8 -*-
"""
gamma_ratios.py
---------------
Rapporti di funzioni Gamma del tipo Γ²(μ)/(Γ(μ+n+1)Γ(μ-n)) per μ razionale positivo,
riscritti come prodotti di Pochhammer: Γ non viene mai valutata.
Per μ intero <= n il numeratore contiene il fattore 0 e il rapporto è esattamente nullo
(1/Γ ha zeri semplici nei poli di Γ).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from identity_manager.exact.exact_arith import RationalLike, pochhammer_rising, to_rational
from identity_manager.exact.legendre_poly import ExactPolynomial, compose_linear, legendre_via_recursion


@dataclass(frozen=True)
class MuParameter:
    mu: Fraction

    def __post_init__(self) -> None:
        mu = to_rational(self.mu)
        if mu <= 0:
            raise ValueError(f"μ deve essere > 0 (ricevuto {mu}).")
        object.__setattr__(self, "mu", mu)


MuLike = Union[MuParameter, RationalLike]


def _as_mu(mu: MuLike) -> Fraction:
    if isinstance(mu, MuParameter):
        return mu.mu
    return MuParameter(to_rational(mu)).mu


def gamma_ratio_A(mu: MuLike, n: int) -> Fraction:
    """Γ²(μ)/(Γ(μ+n+1)Γ(μ-n)) = (μ-n)_n / (μ)_{n+1}."""
    if n < 0:
        raise ValueError(f"gamma_ratio_A richiede n >= 0 (ricevuto n={n}).")
    mu = _as_mu(mu)
    return pochhammer_rising(mu - n, n) / pochhammer_rising(mu, n + 1)


def theorem33_rhs(mu: MuLike, n: int) -> Fraction:
    """(-1)^n/(4n) · (A(μ, n) - A(μ, n-1))."""
    if n < 1:
        raise ValueError(f"theorem33_rhs richiede n >= 1 (ricevuto n={n}).")
    mu = _as_mu(mu)
    return Fraction((-1) ** n, 4 * n) * (gamma_ratio_A(mu, n) - gamma_ratio_A(mu, n - 1))


@lru_cache(maxsize=None)
def _legendre_squared_argument(n: int) -> ExactPolynomial:
    return compose_linear(legendre_via_recursion(n), 2, -1, 2)


def legendre_moment(mu: MuLike, n: int) -> Fraction:
    """
    ∫_0^1 x^{2μ-1} P_n(2x²-1) dx per integrazione termine a termine:
    Σ_j a_j/(j + 2μ), con a_j i coefficienti di P_n(2x²-1).
    """
    mu = _as_mu(mu)
    poly = _legendre_squared_argument(n)
    return sum((a / (j + 2 * mu) for j, a in enumerate(poly.coefficients) if a), Fraction(0))
