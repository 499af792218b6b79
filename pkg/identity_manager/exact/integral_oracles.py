# -*- coding: utf-8 -*-
"""
integral_oracles.py
-------------------
Forme chiuse esatte degli integrali usati nelle identità:
  - momenti logaritmici ∫_0^1 x^p ln(1/x) dx e formula di Gautschi
  - momenti con arcoseno (valori in PiLinear)
  - ∫_{-1}^1 P_n(x) arcsin(x) dx

Il momento ∫_0^1 x^{2n-1} arcsin(x) dx = π/(4n)(1 - 2^{-2n}C(2n,n)) è l'unico dato
assunto come assioma dallo strato PiLinear; tutto il resto è derivato in modo esatto.
float_sanity_check è l'unico codice floating point della libreria.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Tuple, Union

import mpmath as mp

from identity_manager.exact.errors import QuadratureError
from identity_manager.exact.exact_arith import PiLinear, double_factorial, to_rational
from identity_manager.exact.gamma_ratios import gamma_ratio_A, MuParameter
from identity_manager.exact.legendre_poly import (
    ExactPolynomial,
    compose_linear,
    legendre_via_recursion,
    shifted_legendre,
)

logger = logging.getLogger("legendre_sums.integral_oracles")

FLOAT_TOLERANCE = 1e-10


# -----------------------------------------------------------------------------
# Momenti logaritmici
# -----------------------------------------------------------------------------
def power_log_moment(p: int) -> Fraction:
    """∫_0^1 x^p ln(1/x) dx = 1/(p+1)²."""
    if p < 0:
        raise ValueError(f"power_log_moment richiede p >= 0 (ricevuto p={p}).")
    return Fraction(1, (p + 1) ** 2)


def poly_log_moment(p: ExactPolynomial) -> Fraction:
    return sum((c * power_log_moment(j) for j, c in enumerate(p.coefficients)), Fraction(0))


def gautschi_value(m: int, n: int) -> Fraction:
    """∫_0^1 x^m ln(1/x) P_n(2x-1) dx = (-1)^{n-m} (m!)² (n-m-1)!/(n+m+1)!, per n > m >= 0."""
    if m < 0 or n <= m:
        raise ValueError(f"gautschi_value richiede n > m >= 0 (ricevuti m={m}, n={n}).")
    return Fraction((-1) ** (n - m) * factorial(m) ** 2 * factorial(n - m - 1), factorial(n + m + 1))


# -----------------------------------------------------------------------------
# Momenti con arcoseno
# -----------------------------------------------------------------------------
def arcsin_power_moment(k: int) -> PiLinear:
    """∫_0^1 x^k arcsin(x) dx per k = 2n-1 dispari."""
    if k < 1 or k % 2 == 0:
        raise ValueError(f"arcsin_power_moment richiede k dispari >= 1 (ricevuto k={k}).")
    n = (k + 1) // 2
    return PiLinear.pi_multiple(Fraction(1, 4 * n) * (1 - Fraction(comb(2 * n, n), 4 ** n)))


def arcsin_poly_moment(p: ExactPolynomial) -> PiLinear:
    """∫_{-1}^1 p(x) arcsin(x) dx: i termini pari si annullano per simmetria."""
    total = PiLinear()
    for k, c in enumerate(p.coefficients):
        if k % 2 == 1 and c:
            total = total + arcsin_power_moment(k) * (2 * c)
    return total


def binom_arcsin_moment_closed(k: int) -> PiLinear:
    """∫_{-1}^1 (1+x)^k arcsin(x) dx = π(2^k/(k+1) - 2^{-k}(2k+1)C(2k,k)/(k+1)²)."""
    if k < 0:
        raise ValueError(f"binom_arcsin_moment_closed richiede k >= 0 (ricevuto k={k}).")
    return PiLinear.pi_multiple(
        Fraction(2 ** k, k + 1) - Fraction((2 * k + 1) * comb(2 * k, k), 2 ** k * (k + 1) ** 2)
    )


def legendre_arcsin_value(n: int) -> PiLinear:
    """I_n = ∫_{-1}^1 P_n(x) arcsin(x) dx: 0 per n pari, π((n-2)!!/(2^{(n+1)/2}((n+1)/2)!))² per n dispari."""
    if n < 0:
        raise ValueError(f"legendre_arcsin_value richiede n >= 0 (ricevuto n={n}).")
    if n % 2 == 0:
        return PiLinear()
    h = (n + 1) // 2
    return PiLinear.pi_multiple((double_factorial(n - 2) / (2 ** h * factorial(h))) ** 2)


# -----------------------------------------------------------------------------
# Controllo floating point (quadratura adattiva mpmath)
# -----------------------------------------------------------------------------
Exact = Union[Fraction, PiLinear]
OracleSpec = Tuple[Callable, Tuple, Exact]


def _mp_poly(p: ExactPolynomial) -> Callable:
    coeffs = [mp.mpf(c.numerator) / c.denominator for c in reversed(p.coefficients)] or [mp.mpf(0)]
    return lambda x: mp.polyval(coeffs, x)


def _log_weight(x):
    # ln(1/x) -> 0 per x -> 0 se moltiplicato per x^p; i nodi tanh-sinh non toccano gli estremi
    return mp.mpf(0) if x == 0 else -mp.log(x)


def _log_moment_spec(poly: ExactPolynomial, exact: Fraction) -> OracleSpec:
    f = _mp_poly(poly)
    return (lambda x: f(x) * _log_weight(x)), (0, 1), exact


def _arcsin_spec(poly: ExactPolynomial, exact: PiLinear, interval=(-1, 1)) -> OracleSpec:
    f = _mp_poly(poly)
    return (lambda x: f(x) * mp.asin(x)), interval, exact


def _spec_power_log_moment(p: int) -> OracleSpec:
    return _log_moment_spec(ExactPolynomial.monomial(p), power_log_moment(p))


def _spec_poly_log_moment(poly: ExactPolynomial) -> OracleSpec:
    return _log_moment_spec(poly, poly_log_moment(poly))


def _spec_gautschi_value(m: int, n: int) -> OracleSpec:
    return _log_moment_spec(shifted_legendre(n).shift_degree(m), gautschi_value(m, n))


def _spec_arcsin_power_moment(k: int) -> OracleSpec:
    return _arcsin_spec(ExactPolynomial.monomial(k), arcsin_power_moment(k), interval=(0, 1))


def _spec_arcsin_poly_moment(poly: ExactPolynomial) -> OracleSpec:
    return _arcsin_spec(poly, arcsin_poly_moment(poly))


def _spec_binom_arcsin_moment_closed(k: int) -> OracleSpec:
    base = ExactPolynomial((Fraction(1), Fraction(1)))
    poly = ExactPolynomial.constant(1)
    for _ in range(k):
        poly = poly * base
    return _arcsin_spec(poly, binom_arcsin_moment_closed(k))


def _spec_legendre_arcsin_value(n: int) -> OracleSpec:
    return _arcsin_spec(legendre_via_recursion(n), legendre_arcsin_value(n))


def _spec_legendre_moment(mu, n: int) -> OracleSpec:
    mu = MuParameter(to_rational(mu)).mu
    f = _mp_poly(compose_linear(legendre_via_recursion(n), 2, -1, 2))
    exponent = mp.mpf(2 * mu.numerator) / mu.denominator - 1
    # formula chiusa Γ²(μ)/(2Γ(μ+n+1)Γ(μ-n))
    return (lambda x: f(x) * mp.power(x, exponent)), (0, 1), gamma_ratio_A(mu, n) / 2


FLOAT_ORACLES: Dict[str, Callable[..., OracleSpec]] = {
    "power_log_moment": _spec_power_log_moment,
    "poly_log_moment": _spec_poly_log_moment,
    "gautschi_value": _spec_gautschi_value,
    "arcsin_power_moment": _spec_arcsin_power_moment,
    "arcsin_poly_moment": _spec_arcsin_poly_moment,
    "binom_arcsin_moment_closed": _spec_binom_arcsin_moment_closed,
    "legendre_arcsin_value": _spec_legendre_arcsin_value,
    "legendre_moment": _spec_legendre_moment,
}


def _exact_to_mpf(value: Exact):
    if isinstance(value, PiLinear):
        return _exact_to_mpf(value.rational_part) + _exact_to_mpf(value.pi_part) * mp.pi
    return mp.mpf(value.numerator) / value.denominator


def float_sanity_check(kind: str, tolerance: float = FLOAT_TOLERANCE, **params) -> bool:
    """
    Confronta l'oracolo esatto `kind` con la quadratura tanh-sinh di mpmath.

    L'intervallo è dimezzato (due pannelli) prima della quadratura; i pannelli
    estremi contengono le singolarità integrabili (ln(1/x) in 0, derivata di
    arcsin in ±1) che la quadratura tanh-sinh tratta senza valutare gli estremi.
    Solleva QuadratureError se la stima d'errore supera la tolleranza;
    restituisce False se l'integrale converge ma differisce dal valore esatto.
    """
    if kind not in FLOAT_ORACLES:
        raise ValueError(f"Oracolo sconosciuto: '{kind}' (ammessi: {', '.join(FLOAT_ORACLES)}).")
    integrand, (a, b), exact = FLOAT_ORACLES[kind](**params)
    with mp.workdps(30):
        lo, hi = mp.mpf(a), mp.mpf(b)
        value, error = mp.quad(integrand, [lo, (lo + hi) / 2, hi], error=True)
        if error > tolerance:
            raise QuadratureError(
                f"{kind}{params}: quadratura non convergente (errore stimato {mp.nstr(error, 5)})"
            )
        difference = abs(value - _exact_to_mpf(exact))
    logger.debug("%s%s: quad=%s differenza=%s", kind, params, mp.nstr(value, 15), mp.nstr(difference, 3))
    return difference <= tolerance
