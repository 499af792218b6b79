# -*- coding: utf-8 -*-
"""
series_engine.py
----------------
Serie formali troncate a coefficienti razionali.

Implementa la serie generatrice dei polinomi di Legendre,
(1 - 2xz + z²)^{-1/2} = Σ P_n(x) z^n, e i due lati del lemma di
estrazione dei coefficienti:

    Σ_{k=0}^n (-1)^{n-k} 2n/(n+k) C(n+k,2k) c_k = [z^n] (1-z)/(1+z) F(z/(1+z)²)

Il lato destro è costruito con la scomposizione in due somme
Σ c_k z^k/(1+z)^{2k+1} - Σ c_k z^{k+1}/(1+z)^{2k+1}, non con una composizione generica.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Tuple

from identity_manager.exact.exact_arith import RationalLike, to_rational


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficienti di z^0 ... z^N; len(coefficients) == order + 1."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("Una serie troncata ha almeno il coefficiente di z^0.")
        object.__setattr__(self, "coefficients", tuple(to_rational(c) for c in self.coefficients))

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[RationalLike], order: int) -> "TruncatedSeries":
        """Tronca o completa con zeri fino all'ordine richiesto."""
        if order < 0:
            raise ValueError(f"L'ordine deve essere >= 0 (ricevuto {order}).")
        coeffs = [to_rational(c) for c in coefficients[: order + 1]]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coefficients(self.coefficients, order)

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"Ordini diversi: {self.order} e {other.order} (troncare prima).")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        factor = to_rational(factor)
        return TruncatedSeries(tuple(c * factor for c in self.coefficients))

    def shift(self, k: int) -> "TruncatedSeries":
        """Moltiplica per z^k mantenendo l'ordine."""
        return TruncatedSeries.from_coefficients((Fraction(0),) * k + self.coefficients, self.order)


@dataclass(frozen=True)
class CoefficientSequence:
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("CoefficientSequence richiede almeno un valore.")
        object.__setattr__(self, "values", tuple(to_rational(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


# -----------------------------------------------------------------------------
# Operazioni sulle serie
# -----------------------------------------------------------------------------
def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Prodotto di Cauchy troncato all'ordine comune."""
    f._check_order(g)
    order = f.order
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(f.coefficients):
        if a == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += a * g.coefficients[j]
    return TruncatedSeries(tuple(out))


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    f0 = f[0]
    if f0 == 0:
        raise ValueError("series_inverse: il termine costante è nullo.")
    g = [1 / f0]
    for n in range(1, f.order + 1):
        acc = sum((f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
        g.append(-acc / f0)
    return TruncatedSeries(tuple(g))


def series_power(f: TruncatedSeries, alpha: RationalLike) -> TruncatedSeries:
    """
    f^alpha con f_0 = 1, dalla ricorrenza ottenuta derivando g = f^alpha:
    n·g_n = Σ_{k=1}^n ((alpha+1)k - n) f_k g_{n-k}.
    """
    if f[0] != 1:
        raise ValueError("series_power richiede termine costante uguale a 1.")
    alpha = to_rational(alpha)
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if f[k]:
                acc += ((alpha + 1) * k - n) * f[k] * g[n - k]
        g.append(acc / n)
    return TruncatedSeries(tuple(g))


def series_inv_sqrt(f: TruncatedSeries) -> TruncatedSeries:
    """Unica g con g(0) = 1 e g²·f = 1 fino all'ordine N."""
    if f[0] != 1:
        raise ValueError("series_inv_sqrt richiede termine costante uguale a 1.")
    return series_power(f, Fraction(-1, 2))


def generating_series(x: RationalLike, order: int) -> TruncatedSeries:
    """(1 - 2xz + z²)^{-1/2} troncata: il coefficiente n è P_n(x)."""
    if order < 0:
        raise ValueError(f"generating_series richiede N >= 0 (ricevuto {order}).")
    x = to_rational(x)
    base = TruncatedSeries.from_coefficients((1, -2 * x, 1), order)
    return series_inv_sqrt(base)


# -----------------------------------------------------------------------------
# Lemma di estrazione dei coefficienti
# -----------------------------------------------------------------------------
def _check_lemma_args(c: CoefficientSequence, n: int) -> None:
    if n < 1:
        raise ValueError(f"Il lemma vale per n >= 1 (ricevuto n={n}).")
    if len(c) < n + 1:
        raise ValueError(f"Sequenza troppo corta: servono {n + 1} valori, ricevuti {len(c)}.")


@lru_cache(maxsize=None)
def inverse_odd_power(k: int, order: int) -> TruncatedSeries:
    """1/(1+z)^{2k+1} troncata, calcolata per inversione della serie (non dalla formula chiusa)."""
    base = TruncatedSeries.from_coefficients([comb(2 * k + 1, j) for j in range(2 * k + 2)], order)
    return series_inverse(base)


def lemma_rhs(c: CoefficientSequence, n: int) -> Fraction:
    """
    [z^n] (1-z)/(1+z) F(z/(1+z)²) tramite la scomposizione in due somme:
    il k-esimo addendo contribuisce c_k ([z^{n-k}] - [z^{n-k-1}]) (1+z)^{-(2k+1)}.
    """
    _check_lemma_args(c, n)
    total = Fraction(0)
    for k in range(n + 1):
        if c[k] == 0:
            continue
        inverse = inverse_odd_power(k, n)
        first = inverse[n - k]
        second = inverse[n - k - 1] if k < n else Fraction(0)
        total += c[k] * (first - second)
    return total


def lemma_rhs_series(c: CoefficientSequence, n: int) -> TruncatedSeries:
    """La serie completa (1-z)/(1+z) F(z/(1+z)²) troncata all'ordine n."""
    _check_lemma_args(c, n)
    total = TruncatedSeries.from_coefficients((), n)
    for k in range(n + 1):
        if c[k] == 0:
            continue
        term = inverse_odd_power(k, n).scale(c[k])
        total = total + term.shift(k) - term.shift(k + 1)
    return total


def lemma_lhs(c: CoefficientSequence, n: int) -> Fraction:
    """Somma diretta Σ_{k=0}^n (-1)^{n-k} 2n/(n+k) C(n+k,2k) c_k."""
    _check_lemma_args(c, n)
    total = Fraction(0)
    for k in range(n + 1):
        total += (-1) ** (n - k) * Fraction(2 * n, n + k) * comb(n + k, 2 * k) * c[k]
    return total


def binomial_sequence(x: RationalLike, length: int) -> CoefficientSequence:
    """c_k = C(-1/2, k) x^k = C(2k,k) 2^{-2k} (-1)^k x^k, per k < length."""
    x = to_rational(x)
    return CoefficientSequence(
        tuple(Fraction(comb(2 * k, k) * (-1) ** k, 4 ** k) * x ** k for k in range(length))
    )


def random_sequence(rng: random.Random, length: int, bound: int = 50) -> CoefficientSequence:
    """Sequenza razionale pseudo-casuale (riproducibile con seed)."""
    return CoefficientSequence(
        tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(length))
    )
