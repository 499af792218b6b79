# -*- coding: utf-8 -*-
"""
legendre_poly.py
----------------
Polinomi densi a coefficienti razionali e polinomi di Legendre:
  - due costruzioni indipendenti di P_n (somma di Leibniz e ricorrenza a tre termini)
  - valutazione di Horner
  - sostituzioni p(a·x + b) e p(a·x² + b)
  - integrazione esatta su intervalli
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Sequence, Tuple, Union

from identity_manager.exact.exact_arith import RationalLike, to_rational

logger = logging.getLogger("legendre_sums.legendre_poly")


@dataclass(frozen=True)
class ExactPolynomial:
    """Coefficienti in ordine di grado crescente; il polinomio nullo è la tupla vuota."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [to_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> "ExactPolynomial":
        return cls((to_rational(value),))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "ExactPolynomial":
        return cls((Fraction(0),) * degree + (to_rational(coefficient),))

    @property
    def degree(self) -> int:
        # -1 per il polinomio nullo
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return Fraction(0)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return ExactPolynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)))

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["ExactPolynomial", int, Fraction]) -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            factor = to_rational(other)
            return ExactPolynomial(tuple(c * factor for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return ExactPolynomial()
        # convoluzione schoolbook
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return ExactPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift_degree(self, k: int) -> "ExactPolynomial":
        """Moltiplica per x^k."""
        if self.is_zero():
            return self
        return ExactPolynomial((Fraction(0),) * k + self.coefficients)

    def reflect(self) -> "ExactPolynomial":
        """p(-x)."""
        return ExactPolynomial(tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coefficients)))


ONE = ExactPolynomial.constant(1)
X = ExactPolynomial.monomial(1)


# -----------------------------------------------------------------------------
# Costruzioni di P_n
# -----------------------------------------------------------------------------
def _binomial_product_coefficients(a: int, b: int) -> List[int]:
    """Coefficienti interi di (x+1)^a (x-1)^b."""
    plus = [comb(a, i) for i in range(a + 1)]
    minus = [comb(b, i) * (-1) ** (b - i) for i in range(b + 1)]
    out = [0] * (a + b + 1)
    for i, u in enumerate(plus):
        for j, v in enumerate(minus):
            out[i + j] += u * v
    return out


def legendre_via_sum(n: int) -> ExactPolynomial:
    """P_n(x) = 2^{-n} Σ_k C(n,k)² (x+1)^{n-k} (x-1)^k, espanso nei monomi."""
    if n < 0:
        raise ValueError(f"legendre_via_sum richiede n >= 0 (ricevuto n={n}).")
    totals = [0] * (n + 1)
    for k in range(n + 1):
        weight = comb(n, k) ** 2
        for j, c in enumerate(_binomial_product_coefficients(n - k, k)):
            totals[j] += weight * c
    scale = Fraction(1, 2 ** n)
    return ExactPolynomial(tuple(t * scale for t in totals))


_RECURSION_CACHE: List[ExactPolynomial] = [ONE, X]
_RECURSION_LOCK = threading.Lock()


def legendre_via_recursion(n: int) -> ExactPolynomial:
    """P_0 = 1, P_1 = x, (k+1)P_{k+1} = (2k+1)x P_k - k P_{k-1}; memoizzato per processo."""
    if n < 0:
        raise ValueError(f"legendre_via_recursion richiede n >= 0 (ricevuto n={n}).")
    with _RECURSION_LOCK:
        if len(_RECURSION_CACHE) <= n:
            logger.debug("Estensione cache Legendre da %d a %d", len(_RECURSION_CACHE) - 1, n)
        while len(_RECURSION_CACHE) <= n:
            k = len(_RECURSION_CACHE) - 1
            p_k, p_prev = _RECURSION_CACHE[k], _RECURSION_CACHE[k - 1]
            nxt = ((X * p_k) * (2 * k + 1) - p_prev * k) * Fraction(1, k + 1)
            _RECURSION_CACHE.append(nxt)
        return _RECURSION_CACHE[n]


def legendre(n: int, construction: str = "recursion") -> ExactPolynomial:
    if construction == "recursion":
        return legendre_via_recursion(n)
    if construction == "sum":
        return legendre_via_sum(n)
    raise ValueError(f"Costruzione sconosciuta: '{construction}' (ammesse: 'recursion', 'sum').")


def recursion_residual(n: int) -> ExactPolynomial:
    """(n+1)P_{n+1} - (2n+1)x P_n + n P_{n-1}: deve essere il polinomio nullo per n >= 1."""
    return (
        legendre_via_recursion(n + 1) * (n + 1)
        - (X * legendre_via_recursion(n)) * (2 * n + 1)
        + legendre_via_recursion(n - 1) * n
    )


# -----------------------------------------------------------------------------
# Valutazione, sostituzione, integrazione
# -----------------------------------------------------------------------------
def evaluate(p: ExactPolynomial, x: RationalLike) -> Fraction:
    """Valore esatto di p in x (Horner)."""
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def compose_linear(p: ExactPolynomial, a: RationalLike, b: RationalLike, d: int) -> ExactPolynomial:
    """Espansione esatta di p(a·x^d + b), con d ∈ {1, 2}."""
    if d not in (1, 2):
        raise ValueError(f"compose_linear ammette solo d ∈ {{1, 2}} (ricevuto d={d}).")
    inner = ExactPolynomial.monomial(d, a) + ExactPolynomial.constant(b)
    acc = ExactPolynomial()
    for c in reversed(p.coefficients):
        acc = acc * inner + ExactPolynomial.constant(c)
    return acc


def shifted_legendre(n: int) -> ExactPolynomial:
    """P_n(2x - 1), ortogonale su [0, 1]."""
    return compose_linear(legendre_via_recursion(n), 2, -1, 1)


def antiderivative(p: ExactPolynomial) -> ExactPolynomial:
    """Primitiva con costante nulla."""
    return ExactPolynomial((Fraction(0),) + tuple(c / (j + 1) for j, c in enumerate(p.coefficients)))


def integrate_interval(p: ExactPolynomial, a: RationalLike, b: RationalLike) -> Fraction:
    """∫_a^b p(x) dx esatto."""
    primitive = antiderivative(p)
    return evaluate(primitive, b) - evaluate(primitive, a)


def product(polys: Iterable[ExactPolynomial]) -> ExactPolynomial:
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc


def power(p: ExactPolynomial, k: int) -> ExactPolynomial:
    if k < 0:
        raise ValueError("Esponente negativo non ammesso.")
    return product([p] * k)


def from_coefficients(coefficients: Sequence[RationalLike]) -> ExactPolynomial:
    return ExactPolynomial(tuple(to_rational(c) for c in coefficients))
