# -*- coding: utf-8 -*-
"""
identity_suite.py
-----------------
Registro chiuso delle identità combinatorie derivate dai polinomi di Legendre.

Per ogni voce:
  - lhs: somma diretta termine a termine (oracolo indipendente, nessuna semplificazione)
  - rhs: forma chiusa, calcolata con legendre_poly / gamma_ratios / exact_arith
  - guard: condizioni di ammissibilità; i casi esclusi non sono mai fallimenti

Notazione: T(n, k) = C(n+k, 2k) · C(2k, k).
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from identity_manager.exact.cases import ClosedFormValues, IdentityCase, IdentityDescriptor, VerificationResult
from identity_manager.exact.errors import GuardViolation, UnknownIdentityError
from identity_manager.exact.exact_arith import PiLinear, to_rational
from identity_manager.exact.gamma_ratios import theorem33_rhs
from identity_manager.exact.integral_oracles import binom_arcsin_moment_closed, legendre_arcsin_value
from identity_manager.exact.legendre_poly import (
    ExactPolynomial,
    evaluate,
    legendre,
    power,
)
from identity_manager.exact.series_engine import generating_series

logger = logging.getLogger("legendre_sums.identity_suite")

DEFAULT_X_GRID: Tuple[str, ...] = ("0", "1", "-1", "1/2", "-1/2", "2", "-2", "-4", "3/7")
DEFAULT_MU_GRID: Tuple[str, ...] = ("1/2", "3/2", "7/3", "5", "n", "n+1")

Guard = Callable[[IdentityCase], Optional[str]]


def _t(n: int, k: int) -> int:
    return comb(n + k, 2 * k) * comb(2 * k, k)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class _Identity:
    descriptor: IdentityDescriptor
    lhs: Callable[[IdentityCase], Fraction]
    rhs: Callable[[IdentityCase], Fraction]
    extra_guard: Optional[Guard] = None


_REGISTRY: Dict[str, _Identity] = {}


def _register(identity_id: str, anchor: str, lhs, rhs, *, params=(), min_n=1, guards=(), extra_guard=None) -> None:
    all_guards = (f"n >= {min_n}",) + tuple(guards)
    descriptor = IdentityDescriptor(
        identity_id=identity_id, anchor=anchor, params=tuple(params), min_n=min_n, guards=all_guards
    )
    _REGISTRY[identity_id] = _Identity(descriptor, lhs, rhs, extra_guard)


# -----------------------------------------------------------------------------
# Forme chiuse ausiliarie
# -----------------------------------------------------------------------------
def closed_form_values(n: int) -> ClosedFormValues:
    """S_n = (-5/4)^n Σ C(n,k)² 5^{-k},  Q_n = (-3/4)^n Σ C(n,k)² (-1)^k 3^{-k}."""
    s = Fraction(-5, 4) ** n * sum(Fraction(comb(n, k) ** 2, 5 ** k) for k in range(n + 1))
    q = Fraction(-3, 4) ** n * sum(Fraction(comb(n, k) ** 2 * _sign(k), 3 ** k) for k in range(n + 1))
    return ClosedFormValues(n=n, S_n=s, Q_n=q)


def _legendre_difference(n: int, y: Fraction, construction: str = "recursion") -> Fraction:
    """P_n(y) - P_{n-1}(y) con la costruzione richiesta ("recursion", "sum", "series")."""
    if construction == "series":
        series = generating_series(y, n)
        return series[n] - series[n - 1]
    return evaluate(legendre(n, construction), y) - evaluate(legendre(n - 1, construction), y)


def main_theorem_rhs(n: int, x, construction: str = "recursion") -> Fraction:
    """(-1)^n/(2n) (P_n(y) - P_{n-1}(y)), y = -(x+2)/2."""
    y = -(to_rational(x) + 2) / 2
    return Fraction(_sign(n), 2 * n) * _legendre_difference(n, y, construction)


# -----------------------------------------------------------------------------
# Voci del registro
# -----------------------------------------------------------------------------
def _lhs_main_theorem(case: IdentityCase) -> Fraction:
    n, x = case.n, case.param("x")
    return sum((Fraction(_t(n, k), 4 ** k * (n + k)) * x ** k for k in range(n + 1)), Fraction(0))


def _rhs_main_theorem(case: IdentityCase) -> Fraction:
    return main_theorem_rhs(case.n, case.param("x"))


def _lhs_main_transformed(case: IdentityCase) -> Fraction:
    n, x = case.n, case.param("x")
    return sum((Fraction(_t(n, k) * _sign(k), n + k) * x ** k for k in range(n + 1)), Fraction(0))


def _rhs_main_transformed(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(_sign(n), 2 * n) * _legendre_difference(n, 2 * case.param("x") - 1)


def _lhs_sn_closed(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k), 4 ** k * (n + k)) for k in range(n + 1)), Fraction(0))


def _rhs_sn_closed(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(_sign(n), 2 * n) * (closed_form_values(n).S_n - closed_form_values(n - 1).S_n)


def _lhs_qn_closed(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), 4 ** k * (n + k)) for k in range(n + 1)), Fraction(0))


def _rhs_qn_closed(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(_sign(n), 2 * n) * (closed_form_values(n).Q_n - closed_form_values(n - 1).Q_n)


def _lhs_alternating_zero(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), n + k) for k in range(n + 1)), Fraction(0))


def _rhs_zero(case: IdentityCase) -> Fraction:
    return Fraction(0)


def _half_power_sum(big_n: int) -> Fraction:
    return sum((Fraction(_t(big_n, k) * _sign(k), 2 ** k * (big_n + k)) for k in range(big_n + 1)), Fraction(0))


def _lhs_p0_even(case: IdentityCase) -> Fraction:
    return _half_power_sum(2 * case.n)


def _rhs_p0_even(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(_sign(n) * comb(2 * n, n), 4 * n * 4 ** n)


def _lhs_p0_odd(case: IdentityCase) -> Fraction:
    return _half_power_sum(2 * case.n + 1)


def _rhs_p0_odd(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(_sign(n) * comb(2 * n, n), 2 * (2 * n + 1) * 4 ** n)


def _lhs_int_unit(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), (n + k) * (k + 1)) for k in range(n + 1)), Fraction(0))


def _rhs_int_unit(case: IdentityCase) -> Fraction:
    return Fraction(1, 2) if case.n == 1 else Fraction(0)


def _lhs_int_unit_k(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k) * k, (n + k) * (k + 1)) for k in range(n + 1)), Fraction(0))


def _rhs_int_unit_k(case: IdentityCase) -> Fraction:
    return Fraction(-1, 2) if case.n == 1 else Fraction(0)


def _lhs_gamma_mu(case: IdentityCase) -> Fraction:
    n, mu = case.n, case.param("mu")
    return sum((Fraction(_t(n, k) * _sign(k), n + k) / (2 * k + 2 * mu) for k in range(n + 1)), Fraction(0))


def _rhs_gamma_mu(case: IdentityCase) -> Fraction:
    return theorem33_rhs(case.param("mu"), case.n)


def _guard_gamma_mu(case: IdentityCase) -> Optional[str]:
    return None if case.param("mu") > 0 else "mu > 0"


def _lhs_mu_half(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), (n + k) * (2 * k + 1)) for k in range(n + 1)), Fraction(0))


def _rhs_mu_half(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(2, (2 * n - 1) * (2 * n + 1))


def _lhs_mu_three_half(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), (n + k) * (2 * k + 3)) for k in range(n + 1)), Fraction(0))


def _rhs_mu_three_half(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(-2, (2 * n - 3) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3))


def _lhs_mu_n(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), (n + k) ** 2) for k in range(n + 1)), Fraction(0))


def _rhs_mu_n(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(-_sign(n), n * n * comb(2 * n, n))


def _lhs_mu_n_plus_1(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k) * _sign(k), (n + k) * (n + 1 + k)) for k in range(n + 1)), Fraction(0))


def _rhs_mu_n_plus_1(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(-_sign(n), (2 * n + 1) * comb(2 * n, n))


def _lhs_combo_k_2k1(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(-_t(n, k) * _sign(k) * k, (n + k) * (2 * k + 1)) for k in range(n + 1)), Fraction(0))


def _rhs_combo_k_2k1(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(1, (2 * n - 1) * (2 * n + 1))


def _lhs_combo_k1_2k3(case: IdentityCase) -> Fraction:
    n = case.n
    return sum(
        (Fraction(_t(n, k) * _sign(k) * (k + 1), (n + k) * (2 * k + 3)) for k in range(n + 1)), Fraction(0)
    )


def _rhs_combo_k1_2k3(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(1, (2 * n - 3) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3))


def _lhs_combo_squared(case: IdentityCase) -> Fraction:
    n = case.n
    return sum(
        (Fraction(_t(n, k) * _sign(k), (n + k) ** 2 * (n + 1 + k)) for k in range(n + 1)), Fraction(0)
    )


def _rhs_combo_squared(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(_sign(n) * (n * n - 2 * n - 1), n * n * (2 * n + 1) * comb(2 * n, n))


def _log_sum(n: int, shift: int) -> Fraction:
    """Σ_k T(n,k)(-1)^k / ((n+k)(k+shift)²)."""
    return sum((Fraction(_t(n, k) * _sign(k), (n + k) * (k + shift) ** 2) for k in range(n + 1)), Fraction(0))


def _lhs_log_moment(case: IdentityCase) -> Fraction:
    return _log_sum(case.n, case.param("m") + 1)


def _rhs_log_moment(case: IdentityCase) -> Fraction:
    n, m = case.n, case.param("m")
    return Fraction(_sign(m) * factorial(m) ** 2 * factorial(n - m - 2), factorial(n + m + 1))


def _guard_log_moment(case: IdentityCase) -> Optional[str]:
    m = case.param("m")
    return None if 0 <= m < case.n - 1 else "0 <= m < n-1"


def _lhs_log_m0(case: IdentityCase) -> Fraction:
    return _log_sum(case.n, 1)


def _rhs_log_m0(case: IdentityCase) -> Fraction:
    n = case.n
    if n == 1:
        return Fraction(3, 4)
    return Fraction(1, (n - 1) * n * (n + 1))


def _lhs_log_m1(case: IdentityCase) -> Fraction:
    return -_log_sum(case.n, 2)


def _rhs_log_m1(case: IdentityCase) -> Fraction:
    n = case.n
    if n == 1:
        return Fraction(-5, 36)
    if n == 2:
        return Fraction(1, 288)
    return Fraction(1, (n - 2) * (n - 1) * n * (n + 1) * (n + 2))


def _lhs_log_m_n2(case: IdentityCase) -> Fraction:
    return _log_sum(case.n, case.n - 1)


def _rhs_log_m_n2(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(2 * _sign(n), (n - 1) ** 2 * n * comb(2 * n, n))


def arcsin_sum(big_n: int) -> Fraction:
    """Σ_{k=0}^N C(N+k,2k) C(2k,k)² 2^{-2k} (2k+1) (-1)^k / ((N+k)(k+1)²)."""
    return sum(
        (
            Fraction(comb(big_n + k, 2 * k) * comb(2 * k, k) ** 2 * (2 * k + 1) * _sign(k),
                     4 ** k * (big_n + k) * (k + 1) ** 2)
            for k in range(big_n + 1)
        ),
        Fraction(0),
    )


def _lhs_arcsin_even(case: IdentityCase) -> Fraction:
    return arcsin_sum(2 * case.n)


def _rhs_arcsin_even(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(comb(2 * (n - 1), n - 1) ** 2, 16 ** n * n ** 3)


def _lhs_arcsin_odd(case: IdentityCase) -> Fraction:
    return arcsin_sum(2 * case.n + 1)


def _rhs_arcsin_odd(case: IdentityCase) -> Fraction:
    n = case.n
    return Fraction(comb(2 * n, n) ** 2, 2 ** (4 * n + 3) * (2 * n + 1) * (n + 1) ** 2)


def _lhs_helper_binom(case: IdentityCase) -> Fraction:
    # pesi 2^{-k} per distinguere i singoli k nella somma
    n = case.n
    return sum((Fraction(comb(n + k, k) * comb(n, k), 2 ** k) for k in range(n + 1)), Fraction(0))


def _rhs_helper_binom(case: IdentityCase) -> Fraction:
    n = case.n
    return sum((Fraction(_t(n, k), 2 ** k) for k in range(n + 1)), Fraction(0))


def _odd_indices(k: int) -> range:
    # j = 1 .. floor((k+1)/2)
    return range(1, (k + 1) // 2 + 1)


def _lhs_helper_odd_harmonic(case: IdentityCase) -> Fraction:
    k = case.n
    return sum((Fraction(comb(k, 2 * j - 1), j) for j in _odd_indices(k)), Fraction(0))


def _rhs_helper_odd_harmonic(case: IdentityCase) -> Fraction:
    k = case.n
    return Fraction(2 ** (k + 1) - 2, k + 1)


def _lhs_helper_bataille(case: IdentityCase) -> Fraction:
    m = case.n
    return Fraction(sum(comb(m, j) * comb(m - j, j) * 2 ** (m - 2 * j) for j in range(m // 2 + 1)))


def _rhs_helper_bataille(case: IdentityCase) -> Fraction:
    return Fraction(comb(2 * case.n, case.n))


def _lhs_helper_weighted_central(case: IdentityCase) -> Fraction:
    k = case.n
    return sum(
        (Fraction(comb(k, 2 * j - 1) * comb(2 * j, j), j * 4 ** j) for j in _odd_indices(k)), Fraction(0)
    )


def _rhs_helper_weighted_central(case: IdentityCase) -> Fraction:
    k = case.n
    return Fraction(-2, k + 1) + Fraction(2) ** (1 - k) * Fraction((2 * k + 1) * comb(2 * k, k), (k + 1) ** 2)


_register("main_theorem", "Σ T(n,k) 2^{-2k} x^k/(n+k) = (-1)^n/(2n)(P_n - P_{n-1})(-(x+2)/2)",
          _lhs_main_theorem, _rhs_main_theorem, params=("x",))
_register("main_transformed", "forma con x -> -4x: Σ T(n,k)(-1)^k x^k/(n+k) = (-1)^n/(2n)(P_n - P_{n-1})(2x-1)",
          _lhs_main_transformed, _rhs_main_transformed, params=("x",))
_register("sn_closed", "caso x = 1 tramite S_n = P_n(-3/2)", _lhs_sn_closed, _rhs_sn_closed)
_register("qn_closed", "caso x = -1 tramite Q_n = P_n(-1/2)", _lhs_qn_closed, _rhs_qn_closed)
_register("alternating_zero", "Σ T(n,k)(-1)^k/(n+k) = 0 da P_n(1) = 1", _lhs_alternating_zero, _rhs_zero)
_register("p0_even", "indice 2n, da P_{2n}(0) = (-1)^n 2^{-2n} C(2n,n)", _lhs_p0_even, _rhs_p0_even)
_register("p0_odd", "indice 2n+1, da P_{2n+1}(0) = 0", _lhs_p0_odd, _rhs_p0_odd, min_n=0)
_register("int_unit", "integrazione su [0,1]: 1/2 per n = 1, 0 per n >= 2", _lhs_int_unit, _rhs_int_unit)
_register("int_unit_k", "peso k/(k+1): -1/2 per n = 1, 0 per n >= 2", _lhs_int_unit_k, _rhs_int_unit_k)
_register("gamma_mu", "peso 1/(2k+2μ): rapporti di Gamma", _lhs_gamma_mu, _rhs_gamma_mu,
          params=("mu",), guards=("mu > 0",), extra_guard=_guard_gamma_mu)
_register("mu_half", "caso μ = 1/2", _lhs_mu_half, _rhs_mu_half)
_register("mu_three_half", "caso μ = 3/2", _lhs_mu_three_half, _rhs_mu_three_half)
_register("mu_n", "caso μ = n", _lhs_mu_n, _rhs_mu_n)
_register("mu_n_plus_1", "caso μ = n+1", _lhs_mu_n_plus_1, _rhs_mu_n_plus_1)
_register("combo_k_2k1", "combinazione di μ = 1/2 con la somma alternante nulla",
          _lhs_combo_k_2k1, _rhs_combo_k_2k1)
_register("combo_k1_2k3", "combinazione di μ = 3/2 con la somma alternante nulla",
          _lhs_combo_k1_2k3, _rhs_combo_k1_2k3)
_register("combo_squared", "combinazione dei casi μ = n e μ = n+1", _lhs_combo_squared, _rhs_combo_squared)
_register("log_moment", "peso x^m ln(1/x) e formula di Gautschi", _lhs_log_moment, _rhs_log_moment,
          params=("m",), min_n=2, guards=("0 <= m < n-1",), extra_guard=_guard_log_moment)
_register("log_m0", "caso m = 0: 3/4 per n = 1", _lhs_log_m0, _rhs_log_m0)
_register("log_m1", "caso m = 1: -5/36 per n = 1, 1/288 per n = 2", _lhs_log_m1, _rhs_log_m1)
_register("log_m_n2", "caso m = n-2", _lhs_log_m_n2, _rhs_log_m_n2, min_n=2)
_register("arcsin_even", "peso arcsin, indice 2n: quadrati dei binomiali centrali",
          _lhs_arcsin_even, _rhs_arcsin_even)
_register("arcsin_odd", "peso arcsin, indice 2n+1: quadrati dei binomiali centrali",
          _lhs_arcsin_odd, _rhs_arcsin_odd)
_register("helper_binom_equalities", "C(n+k,k)C(n,k) = C(n+k,2k)C(2k,k) (somme pesate 2^{-k})",
          _lhs_helper_binom, _rhs_helper_binom, min_n=0)
_register("helper_odd_harmonic", "Σ_j C(k,2j-1)/j = (2^{k+1}-2)/(k+1)",
          _lhs_helper_odd_harmonic, _rhs_helper_odd_harmonic, min_n=0)
_register("helper_bataille", "Σ_j C(m,j)C(m-j,j)2^{m-2j} = C(2m,m)",
          _lhs_helper_bataille, _rhs_helper_bataille, min_n=0)
_register("helper_weighted_central", "Σ_j C(k,2j-1) 2^{-2j} C(2j,j)/j in forma chiusa",
          _lhs_helper_weighted_central, _rhs_helper_weighted_central, min_n=0)


# -----------------------------------------------------------------------------
# Operazioni sul registro
# -----------------------------------------------------------------------------
def registry_list() -> List[IdentityDescriptor]:
    return [identity.descriptor for identity in _REGISTRY.values()]


def lookup(identity_id: str) -> IdentityDescriptor:
    return _get(identity_id).descriptor


def _get(identity_id: str) -> _Identity:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def guard_violation(case: IdentityCase) -> Optional[str]:
    """Prima condizione violata dal caso, oppure None se il caso è ammesso."""
    identity = _get(case.identity_id)
    descriptor = identity.descriptor
    if case.n < descriptor.min_n:
        return f"n >= {descriptor.min_n}"
    for name in descriptor.params:
        if name not in case.extra_params:
            return f"parametro '{name}' richiesto"
    if identity.extra_guard is not None:
        return identity.extra_guard(case)
    return None


def _check_guard(case: IdentityCase) -> _Identity:
    violated = guard_violation(case)
    if violated:
        raise GuardViolation(case.identity_id, violated)
    return _get(case.identity_id)


def lhs_sum(case: IdentityCase) -> Fraction:
    return _check_guard(case).lhs(case)


def rhs_closed(case: IdentityCase) -> Fraction:
    return _check_guard(case).rhs(case)


def verify_case(case: IdentityCase) -> VerificationResult:
    identity = _check_guard(case)
    start = time.perf_counter_ns()
    lhs = identity.lhs(case)
    rhs = identity.rhs(case)
    micros = (time.perf_counter_ns() - start) // 1000
    return VerificationResult(case=case, lhs=lhs, rhs=rhs, equal=lhs == rhs, micros=micros)


def probe_case(case: IdentityCase) -> VerificationResult:
    """
    Valuta un caso escluso dalle guardie a solo scopo informativo
    (es. arcsin_odd con n = 0: LHS 5/8, RHS 1/8). Il risultato è sempre skipped.
    """
    identity = _get(case.identity_id)
    reason = guard_violation(case) or "nessuna"
    try:
        lhs, rhs = identity.lhs(case), identity.rhs(case)
    except (ArithmeticError, ValueError, KeyError) as e:
        return VerificationResult(case=case, skipped=True, note=f"esclusa ({reason}); non valutabile: {e}")
    return VerificationResult(case=case, lhs=lhs, rhs=rhs, equal=lhs == rhs, skipped=True,
                              note=f"esclusa ({reason})")


# -----------------------------------------------------------------------------
# Enumerazione dei casi e sweep
# -----------------------------------------------------------------------------
ParamToken = Union[int, str, Fraction]


def resolve_token(token: ParamToken, n: int) -> Fraction:
    """Risolve valori simbolici relativi a n ("n", "n+1", "n-2") oppure razionali."""
    if isinstance(token, str):
        text = token.replace(" ", "")
        if text.startswith("n"):
            offset = text[1:]
            return Fraction(n + (int(offset) if offset else 0))
    return to_rational(token)


def default_param_samples(identity_id: str, n_values: Sequence[int]) -> Dict[str, List[ParamToken]]:
    samples: Dict[str, List[ParamToken]] = {}
    for name in _get(identity_id).descriptor.params:
        if name == "x":
            samples[name] = list(DEFAULT_X_GRID)
        elif name == "mu":
            samples[name] = list(DEFAULT_MU_GRID)
        elif name == "m":
            samples[name] = list(range(0, max(n_values, default=0)))
    return samples


def _param_grid(samples: Mapping[str, Sequence[ParamToken]], n: int) -> List[Dict[str, Fraction]]:
    grid: List[Dict[str, Fraction]] = [{}]
    for name, tokens in samples.items():
        grid = [dict(point, **{name: resolve_token(token, n)}) for point in grid for token in tokens]
    return grid


def enumerate_cases(
    identity_id: str,
    n_range: Iterable[int],
    param_samples: Optional[Mapping[str, Sequence[ParamToken]]] = None,
) -> Tuple[List[IdentityCase], List[IdentityCase]]:
    """Restituisce (casi ammessi, casi esclusi dalle guardie), ordinati e senza duplicati."""
    descriptor = _get(identity_id).descriptor
    n_values = list(n_range)
    samples = dict(default_param_samples(identity_id, n_values))
    samples.update({k: v for k, v in (param_samples or {}).items() if k in descriptor.params})
    admissible: Dict[tuple, IdentityCase] = {}
    excluded: Dict[tuple, IdentityCase] = {}
    for n in n_values:
        for point in _param_grid(samples, n):
            case = IdentityCase(identity_id=identity_id, n=n, extra_params=point)
            target = excluded if guard_violation(case) else admissible
            target.setdefault(case.sort_key(), case)
    return (
        [admissible[k] for k in sorted(admissible)],
        [excluded[k] for k in sorted(excluded)],
    )


def verify_cases(
    cases: Sequence[IdentityCase],
    jobs: int = 1,
    executor: Optional[Executor] = None,
) -> List[VerificationResult]:
    """
    Verifica i casi, eventualmente in parallelo; l'ordine di uscita non dipende da jobs.
    Un executor già aperto (es. dal manager, per più identità) ha la precedenza su jobs.
    """
    if jobs < 1:
        raise ValueError(f"jobs deve essere >= 1 (ricevuto {jobs}).")
    chunksize = max(1, len(cases) // (jobs * 8))
    if executor is not None:
        results = list(executor.map(verify_case, cases, chunksize=chunksize))
    elif jobs == 1 or len(cases) < 2:
        results = [verify_case(case) for case in cases]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(verify_case, cases, chunksize=chunksize))
    return sorted(results, key=lambda r: r.case.sort_key())


def verify_range(
    identity_id: str,
    n_range: Iterable[int],
    param_samples: Optional[Mapping[str, Sequence[ParamToken]]] = None,
    jobs: int = 1,
) -> List[VerificationResult]:
    """Un risultato per ogni caso ammesso; i fallimenti sono registrati, mai sollevati."""
    admissible, _ = enumerate_cases(identity_id, n_range, param_samples)
    return verify_cases(admissible, jobs=jobs)


# -----------------------------------------------------------------------------
# Identità ausiliarie e pipeline con arcoseno
# -----------------------------------------------------------------------------
def _odd_part_polynomial(k: int) -> ExactPolynomial:
    one_plus = power(ExactPolynomial((Fraction(1), Fraction(1))), k)
    one_minus = power(ExactPolynomial((Fraction(1), Fraction(-1))), k)
    return (one_plus - one_minus) * Fraction(1, 2)


def helper_first_failure(k_max: int) -> Optional[str]:
    """Prima identità ausiliaria (con indice) che non vale fino a k_max, oppure None."""
    if k_max < 1:
        raise ValueError(f"k_max deve essere >= 1 (ricevuto {k_max}).")
    for n in range(k_max + 1):
        for k in range(n + 1):
            chain = {
                comb(n + k, k) * comb(n, k),
                comb(n + k, n) * comb(n, n - k),
                comb(n + k, n - k) * comb(2 * k, k),
                comb(n + k, 2 * k) * comb(2 * k, k),
            }
            if len(chain) != 1:
                return f"(a) n={n}, k={k}"
    checks = (
        ("(b)", _lhs_helper_odd_harmonic, _rhs_helper_odd_harmonic),
        ("(c)", _lhs_helper_bataille, _rhs_helper_bataille),
        ("(d)", _lhs_helper_weighted_central, _rhs_helper_weighted_central),
    )
    for label, lhs, rhs in checks:
        for k in range(k_max + 1):
            case = IdentityCase(identity_id="helper", n=k)
            if lhs(case) != rhs(case):
                return f"{label} k={k}"
    for k in range(k_max + 1):
        odd = ExactPolynomial(tuple(comb(k, j) if j % 2 else 0 for j in range(k + 1)))
        if odd != _odd_part_polynomial(k):
            return f"(e) k={k}"
    return None


def helper_identities_check(k_max: int) -> bool:
    failure = helper_first_failure(k_max)
    if failure:
        logger.warning("Identità ausiliaria non verificata: %s", failure)
    return failure is None


def arcsin_pipeline_sides(big_n: int) -> Tuple[PiLinear, PiLinear]:
    """
    Σ_k T(N,k)(-1)^k 2^{-k}/(N+k) · ∫(1+x)^k arcsin  e  (-1)^N/(2N)(I_N - I_{N-1}),
    entrambi in PiLinear: devono coincidere per ogni N >= 1.
    """
    if big_n < 1:
        raise ValueError(f"arcsin_pipeline_sides richiede N >= 1 (ricevuto {big_n}).")
    lhs = PiLinear()
    for k in range(big_n + 1):
        weight = Fraction(_t(big_n, k) * _sign(k), 2 ** k * (big_n + k))
        lhs = lhs + binom_arcsin_moment_closed(k) * weight
    rhs = (legendre_arcsin_value(big_n) - legendre_arcsin_value(big_n - 1)) * Fraction(_sign(big_n), 2 * big_n)
    return lhs, rhs


def arcsin_sum_via_integrals(big_n: int) -> Fraction:
    """
    Somma con i quadrati dei binomiali centrali ricavata dagli integrali:
    il coefficiente di π del lato sinistro vale int_unit(N) - arcsin_sum(N).
    """
    _, rhs = arcsin_pipeline_sides(big_n)
    int_unit = Fraction(1, 2) if big_n == 1 else Fraction(0)
    return int_unit - rhs.pi_part
