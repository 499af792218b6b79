# -*- coding: utf-8 -*-
"""
identity_manager.py
-------------------
Classe ad alto livello che usa la libreria exact/ per:
  - caricare la configurazione da JSON (con override da variabili d'ambiente)
  - elencare il registro delle identità
  - eseguire sweep di verifica esatta su più identità (anche in parallelo)
  - eseguire le suite di invarianti (selfcheck), con controllo floating point opzionale

Config JSON (esempio):
{
  "n_max": 60,
  "jobs": 1,
  "seed": 20240601,
  "x_grid": ["0", "1", "-1", "1/2", "-1/2", "2", "-2", "-4", "3/7"],
  "mu_grid": ["1/2", "3/2", "7/3", "5", "n", "n+1"],
  "lemma_sequences": 200,
  "lemma_n_max": 40,
  "float_tolerance": 1e-10
}
"""
from __future__ import annotations

import json
import logging
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from identity_manager.exact import identity_suite
from identity_manager.exact.cases import IdentityCase, IdentityDescriptor, IdentitySweep, SuiteOutcome
from identity_manager.exact.errors import ConfigurationError, QuadratureError
from identity_manager.exact.exact_arith import PiLinear, format_exact
from identity_manager.exact.gamma_ratios import gamma_ratio_A, legendre_moment, theorem33_rhs
from identity_manager.exact.integral_oracles import (
    FLOAT_TOLERANCE,
    arcsin_poly_moment,
    binom_arcsin_moment_closed,
    float_sanity_check,
    gautschi_value,
    legendre_arcsin_value,
    poly_log_moment,
)
from identity_manager.exact.legendre_poly import (
    ExactPolynomial,
    evaluate,
    integrate_interval,
    legendre_via_recursion,
    legendre_via_sum,
    power,
    recursion_residual,
    shifted_legendre,
)
from identity_manager.exact.series_engine import (
    binomial_sequence,
    generating_series,
    lemma_lhs,
    lemma_rhs,
    random_sequence,
)

logger = logging.getLogger("legendre_sums.manager")


class IdentityManager:
    """
    Bootstrap:
      - config JSON (se presente) + variabili d'ambiente LS_*

    Metodi di alto livello:
      - registry()
      - verify()
      - selfcheck()
      - show_config()
    """

    DEFAULT_CONFIG_PATH = "legendre_sums_config.json"
    DEFAULT_N_MAX = 60
    DEFAULT_SEED = 20240601
    DEFAULT_LEMMA_SEQUENCES = 200
    DEFAULT_LEMMA_N_MAX = 40

    def __init__(self, config_path: Optional[str] = None) -> None:
        self.config_path = config_path or os.getenv("LS_CONFIG_PATH", self.DEFAULT_CONFIG_PATH)

        # Stato: default < file JSON < ambiente
        self.state: Dict[str, Any] = {}
        self._load_config()
        self._apply_env()
        self._check_config()

    # ------------- Configurazione -------------
    def _load_config(self) -> None:
        if os.path.exists(self.config_path):
            with open(self.config_path, "r", encoding="utf-8") as f:
                try:
                    self.state = json.load(f)
                except Exception:
                    logger.warning("Config illeggibile (%s): uso i valori di default", self.config_path)
                    self.state = {}
        else:
            self.state = {}
        if not isinstance(self.state, dict):
            self.state = {}

    def _apply_env(self) -> None:
        for key, env in (("n_max", "LS_N_MAX"), ("jobs", "LS_JOBS"), ("seed", "LS_SEED")):
            raw = os.getenv(env)
            if raw is not None:
                try:
                    self.state[key] = int(raw)
                except ValueError:
                    raise ConfigurationError(env, raw) from None

    def _check_config(self) -> None:
        # i valori numerici sono convertiti una volta sola: dopo, le property non sollevano
        for key in ("n_max", "jobs", "seed", "lemma_sequences", "lemma_n_max"):
            if key in self.state:
                value = self.state[key]
                if isinstance(value, bool) or not isinstance(value, (int, str)):
                    raise ConfigurationError(key, value)
                try:
                    self.state[key] = int(value)
                except ValueError:
                    raise ConfigurationError(key, value) from None
        if "float_tolerance" in self.state:
            try:
                self.state["float_tolerance"] = float(self.state["float_tolerance"])
            except (TypeError, ValueError):
                raise ConfigurationError("float_tolerance", self.state["float_tolerance"]) from None
        for key in ("x_grid", "mu_grid"):
            if key in self.state and not isinstance(self.state[key], list):
                raise ConfigurationError(key, self.state[key])

    @property
    def n_max(self) -> int:
        return int(self.state.get("n_max", self.DEFAULT_N_MAX))

    @property
    def jobs(self) -> int:
        return int(self.state.get("jobs", 1))

    @property
    def seed(self) -> int:
        return int(self.state.get("seed", self.DEFAULT_SEED))

    @property
    def x_grid(self) -> List[str]:
        return list(self.state.get("x_grid", identity_suite.DEFAULT_X_GRID))

    @property
    def mu_grid(self) -> List[str]:
        return list(self.state.get("mu_grid", identity_suite.DEFAULT_MU_GRID))

    @property
    def float_tolerance(self) -> float:
        return float(self.state.get("float_tolerance", FLOAT_TOLERANCE))

    def show_config(self) -> Dict[str, Any]:
        """Ritorna lo stato corrente (file JSON + ambiente)."""
        return dict(self.state, config_path=self.config_path)

    # ------------- Registro -------------
    def registry(self, filter_text: Optional[str] = None) -> List[IdentityDescriptor]:
        rows = identity_suite.registry_list()
        if filter_text:
            rows = [d for d in rows if filter_text in d.identity_id]
        return rows

    def resolve_ids(self, identity_ids: Optional[Sequence[str]]) -> List[str]:
        """Nessun id (o "all") significa tutto il registro; id sconosciuti -> UnknownIdentityError."""
        if not identity_ids or "all" in identity_ids:
            return [d.identity_id for d in identity_suite.registry_list()]
        for identity_id in identity_ids:
            identity_suite.lookup(identity_id)
        return list(dict.fromkeys(identity_ids))

    # ------------- Verifica -------------
    def param_samples(
        self,
        x: Optional[Sequence[str]] = None,
        mu: Optional[Sequence[str]] = None,
        m: Optional[Sequence[int]] = None,
    ) -> Dict[str, List]:
        samples: Dict[str, List] = {"x": list(x or self.x_grid), "mu": list(mu or self.mu_grid)}
        if m:
            samples["m"] = list(m)
        return samples

    def verify(
        self,
        identity_ids: Optional[Sequence[str]] = None,
        n_max: Optional[int] = None,
        param_samples: Optional[Dict[str, List]] = None,
        jobs: Optional[int] = None,
        fail_fast: bool = False,
    ) -> List[IdentitySweep]:
        """
        Uno sweep per identità su n ∈ [0, n_max] (le guardie scartano gli indici non ammessi).
        Con fail_fast si interrompe dopo la prima identità con un controesempio.
        """
        ids = self.resolve_ids(identity_ids)
        n_max = self.n_max if n_max is None else int(n_max)
        jobs = self.jobs if jobs is None else int(jobs)
        if n_max < 1:
            raise ValueError(f"n_max deve essere >= 1 (ricevuto {n_max}).")
        if jobs < 1:
            raise ValueError(f"jobs deve essere >= 1 (ricevuto {jobs}).")
        samples = param_samples if param_samples is not None else self.param_samples()

        sweeps: List[IdentitySweep] = []
        pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else nullcontext()
        with pool as executor:
            for identity_id in ids:
                sweep = self._sweep(identity_id, n_max, samples, jobs, executor)
                sweeps.append(sweep)
                if fail_fast and sweep.failures:
                    logger.warning("fail-fast: interrotto dopo '%s'", identity_id)
                    break
        return sweeps

    def _sweep(self, identity_id: str, n_max: int, samples, jobs: int, executor) -> IdentitySweep:
        start = time.perf_counter()
        admissible, excluded = identity_suite.enumerate_cases(identity_id, range(0, n_max + 1), samples)
        # l'indice 0 fuori dal dominio è implicito nel range e non viene riportato
        excluded = [case for case in excluded if case.n > 0 or _is_informational(case)]
        results = identity_suite.verify_cases(admissible, jobs=jobs, executor=executor)
        probes = [identity_suite.probe_case(case) for case in excluded]
        sweep = IdentitySweep(
            identity_id=identity_id,
            results=results,
            excluded=probes,
            elapsed_seconds=time.perf_counter() - start,
        )
        for failure in sweep.failures:
            logger.warning(
                "Controesempio %s n=%d params=%s: lhs=%s rhs=%s",
                identity_id,
                failure.case.n,
                {k: str(v) for k, v in failure.case.extra_params.items()},
                format_exact(failure.lhs),
                format_exact(failure.rhs),
            )
        logger.info(
            "%s: pass=%d fail=%d skipped=%d (%.3fs)",
            identity_id, sweep.passes, len(sweep.failures), len(sweep.excluded), sweep.elapsed_seconds,
        )
        return sweep

    # ------------- Selfcheck -------------
    def selfcheck(
        self,
        seed: Optional[int] = None,
        skip_float: bool = False,
        jobs: Optional[int] = None,
    ) -> List[SuiteOutcome]:
        """Esegue le suite di invarianti; l'ordine delle suite in uscita è fisso."""
        settings = {
            "seed": self.seed if seed is None else int(seed),
            "lemma_sequences": int(self.state.get("lemma_sequences", self.DEFAULT_LEMMA_SEQUENCES)),
            "lemma_n_max": int(self.state.get("lemma_n_max", self.DEFAULT_LEMMA_N_MAX)),
            "float_tolerance": self.float_tolerance,
        }
        names = [name for name in SELFCHECK_SUITES if not (skip_float and name == "float_sanity")]
        jobs = self.jobs if jobs is None else int(jobs)
        if jobs < 1:
            raise ValueError(f"jobs deve essere >= 1 (ricevuto {jobs}).")
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                outcomes = list(executor.map(run_suite, names, [settings] * len(names)))
        else:
            outcomes = [run_suite(name, settings) for name in names]
        for outcome in outcomes:
            level = logging.INFO if outcome.passed else logging.WARNING
            logger.log(level, "suite %s: %d controlli, %d fallimenti (%.3fs)",
                       outcome.name, outcome.checks, len(outcome.failures), outcome.elapsed_seconds)
        return outcomes


def _is_informational(case: IdentityCase) -> bool:
    # n = 0 è riportato solo dove la forma chiusa ha senso ma l'identità non vale
    return case.identity_id in INFORMATIONAL_AT_ZERO


INFORMATIONAL_AT_ZERO = frozenset({"arcsin_odd"})


# -----------------------------------------------------------------------------
# Suite di invarianti (funzioni di modulo: devono essere serializzabili per i worker)
# -----------------------------------------------------------------------------
class _Checker:
    def __init__(self, name: str) -> None:
        self.outcome = SuiteOutcome(name=name)

    def check(self, condition: bool, label: str) -> None:
        self.outcome.checks += 1
        if not condition:
            self.outcome.failures.append(label)


LEGENDRE_X_GRID = ("0", "1", "-1", "1/2", "-1/2", "-3/2", "3/7")
MOMENT_MU_GRID = (Fraction(1, 2), Fraction(3, 2), Fraction(7, 3), Fraction(5))


def _suite_legendre(c: _Checker, settings: Dict[str, Any]) -> None:
    n_max = 60
    for n in range(n_max + 1):
        p = legendre_via_recursion(n)
        c.check(legendre_via_sum(n) == p, f"costruzioni diverse n={n}")
        c.check(p.reflect() == (p if n % 2 == 0 else -p), f"parità n={n}")
        c.check(evaluate(p, 1) == 1, f"P_n(1) n={n}")
        expected_zero = Fraction(0) if n % 2 else Fraction((-1) ** (n // 2) * comb(n, n // 2), 2 ** n)
        c.check(evaluate(p, 0) == expected_zero, f"P_n(0) n={n}")
        if n >= 1:
            c.check(recursion_residual(n).is_zero(), f"residuo ricorrenza n={n}")
        values = identity_suite.closed_form_values(n)
        c.check(values.S_n == evaluate(p, Fraction(-3, 2)), f"S_n n={n}")
        c.check(values.Q_n == evaluate(p, Fraction(-1, 2)), f"Q_n n={n}")
    for x in LEGENDRE_X_GRID:
        series = generating_series(x, n_max)
        for n in range(n_max + 1):
            c.check(series[n] == evaluate(legendre_via_recursion(n), x), f"serie generatrice x={x} n={n}")


def _suite_orthogonality(c: _Checker, settings: Dict[str, Any]) -> None:
    for n in range(31):
        p_n = legendre_via_recursion(n)
        c.check(integrate_interval(p_n * p_n, -1, 1) == Fraction(2, 2 * n + 1), f"norma n={n}")
        for m in range(n):
            c.check(integrate_interval(p_n * legendre_via_recursion(m), -1, 1) == 0, f"ortogonalità m={m} n={n}")
    for n in range(1, 61):
        c.check(integrate_interval(shifted_legendre(n), 0, 1) == 0, f"∫P_n(2x-1) n={n}")


def _suite_lemma(c: _Checker, settings: Dict[str, Any]) -> None:
    rng = random.Random(settings["seed"])
    n_max = settings["lemma_n_max"]
    for index in range(settings["lemma_sequences"]):
        seq = random_sequence(rng, n_max + 1)
        for n in range(1, n_max + 1):
            c.check(lemma_lhs(seq, n) == lemma_rhs(seq, n), f"lemma sequenza={index} n={n}")
    # catena con la serie generatrice: c_k = C(-1/2,k) x^k
    for x in identity_suite.DEFAULT_X_GRID:
        for n in range(1, 21):
            side = Fraction((-1) ** n, 2 * n) * lemma_rhs(binomial_sequence(x, n + 1), n)
            c.check(side == identity_suite.main_theorem_rhs(n, x), f"lemma/teorema x={x} n={n}")


def _suite_integral_oracles(c: _Checker, settings: Dict[str, Any]) -> None:
    for n in range(1, 41):
        p = shifted_legendre(n)
        for m in range(n):
            c.check(poly_log_moment(p.shift_degree(m)) == gautschi_value(m, n), f"Gautschi m={m} n={n}")
    for n in range(41):
        for mu in MOMENT_MU_GRID + tuple(Fraction(j) for j in range(1, n + 2)):
            c.check(2 * legendre_moment(mu, n) == gamma_ratio_A(mu, n), f"momento di Legendre mu={mu} n={n}")
    for n in range(42):
        c.check(arcsin_poly_moment(legendre_via_recursion(n)) == legendre_arcsin_value(n), f"I_n n={n}")
    base = ExactPolynomial((Fraction(1), Fraction(1)))
    for k in range(41):
        c.check(arcsin_poly_moment(power(base, k)) == binom_arcsin_moment_closed(k), f"J_k k={k}")


def _suite_helpers(c: _Checker, settings: Dict[str, Any]) -> None:
    failure = identity_suite.helper_first_failure(40)
    c.check(failure is None, f"identità ausiliaria {failure}")


def _suite_arcsin_pipeline(c: _Checker, settings: Dict[str, Any]) -> None:
    for big_n in range(1, 31):
        lhs, rhs = identity_suite.arcsin_pipeline_sides(big_n)
        c.check(isinstance(lhs, PiLinear) and lhs == rhs, f"pipeline N={big_n}")
        c.check(identity_suite.arcsin_sum_via_integrals(big_n) == identity_suite.arcsin_sum(big_n),
                f"somma arcsin da integrali N={big_n}")
    for n in range(1, 16):
        even = IdentityCase(identity_id="arcsin_even", n=n)
        odd = IdentityCase(identity_id="arcsin_odd", n=n)
        c.check(identity_suite.arcsin_sum_via_integrals(2 * n) == identity_suite.rhs_closed(even), f"pari n={n}")
        c.check(identity_suite.arcsin_sum_via_integrals(2 * n + 1) == identity_suite.rhs_closed(odd), f"dispari n={n}")


def _lhs(identity_id: str, n: int, **params) -> Fraction:
    return identity_suite.lhs_sum(IdentityCase(identity_id=identity_id, n=n, extra_params=params))


def _rhs(identity_id: str, n: int, **params) -> Fraction:
    return identity_suite.rhs_closed(IdentityCase(identity_id=identity_id, n=n, extra_params=params))


def _suite_registry(c: _Checker, settings: Dict[str, Any]) -> None:
    rng = random.Random(settings["seed"])
    # tre percorsi indipendenti per il lato destro del teorema principale
    for x in identity_suite.DEFAULT_X_GRID:
        for n in range(1, 31):
            values = {path: identity_suite.main_theorem_rhs(n, x, path) for path in ("recursion", "sum", "series")}
            c.check(len(set(values.values())) == 1, f"percorsi RHS x={x} n={n}")
            c.check(values["recursion"] == _lhs("main_theorem", n, x=x), f"teorema principale x={x} n={n}")
    for n in range(1, 61):
        c.check(_lhs("mu_n", n) - _lhs("mu_n_plus_1", n) == _lhs("combo_squared", n), f"fratti semplici n={n}")
        c.check(_lhs("int_unit_k", n) == _lhs("alternating_zero", n) - _lhs("int_unit", n), f"combinazione n={n}")
    for n in range(1, 41):
        c.check(2 * theorem33_rhs(n, n) == _rhs("mu_n", n), f"mu=n n={n}")
        c.check(2 * theorem33_rhs(n + 1, n) == _rhs("mu_n_plus_1", n), f"mu=n+1 n={n}")
        c.check(theorem33_rhs(Fraction(1, 2), n) == _rhs("mu_half", n), f"mu=1/2 n={n}")
        c.check(theorem33_rhs(Fraction(3, 2), n) == _rhs("mu_three_half", n), f"mu=3/2 n={n}")
    # griglia di m: {0, 1, n-2} più un m ammissibile casuale
    for n in range(2, 61):
        grid = {0, n - 2, rng.randint(0, n - 2)} | ({1} if n >= 3 else set())
        for m in sorted(grid):
            case = IdentityCase(identity_id="log_moment", n=n, extra_params={"m": m})
            c.check(identity_suite.verify_case(case).equal, f"log_moment m={m} n={n}")
    # valori puntuali
    c.check(_rhs("int_unit", 1) == Fraction(1, 2), "int_unit n=1")
    for n in range(2, 151):
        c.check(_lhs("int_unit", n) == 0, f"int_unit n={n}")
    c.check(_lhs("log_m0", 1) == Fraction(3, 4), "log_m0 n=1")
    c.check(_lhs("log_m1", 1) == Fraction(-5, 36), "log_m1 n=1")
    c.check(_lhs("log_m1", 2) == Fraction(1, 288), "log_m1 n=2")
    c.check(_lhs("arcsin_even", 1) == Fraction(1, 16), "arcsin_even n=1")
    # controllo negativo: fuori dominio l'identità dispari non vale
    probe = identity_suite.probe_case(IdentityCase(identity_id="arcsin_odd", n=0))
    c.check(probe.skipped and probe.lhs == Fraction(5, 8) and probe.rhs == Fraction(1, 8), "arcsin_odd n=0")


def _float_grid() -> Iterable[tuple]:
    for p in range(9):
        yield "power_log_moment", {"p": p}
    for n in range(1, 9):
        yield "poly_log_moment", {"poly": shifted_legendre(n)}
        for m in range(min(n, 4)):
            yield "gautschi_value", {"m": m, "n": n}
    for k in range(1, 9, 2):
        yield "arcsin_power_moment", {"k": k}
    for k in range(9):
        yield "binom_arcsin_moment_closed", {"k": k}
    for n in range(9):
        yield "legendre_arcsin_value", {"n": n}
        yield "arcsin_poly_moment", {"poly": legendre_via_recursion(n)}
        for mu in MOMENT_MU_GRID[:3]:
            yield "legendre_moment", {"mu": mu, "n": n}


def _suite_float_sanity(c: _Checker, settings: Dict[str, Any]) -> None:
    tolerance = settings["float_tolerance"]
    for kind, params in _float_grid():
        label = f"{kind}{ {k: str(v) for k, v in params.items()} }"
        try:
            c.check(float_sanity_check(kind, tolerance=tolerance, **params), f"valore diverso {label}")
        except QuadratureError as e:
            c.check(False, f"quadratura non convergente {label}: {e}")


SELFCHECK_SUITES: Dict[str, Callable[[_Checker, Dict[str, Any]], None]] = {
    "legendre": _suite_legendre,
    "orthogonality": _suite_orthogonality,
    "lemma": _suite_lemma,
    "integral_oracles": _suite_integral_oracles,
    "helpers": _suite_helpers,
    "arcsin_pipeline": _suite_arcsin_pipeline,
    "registry": _suite_registry,
    "float_sanity": _suite_float_sanity,
}


def run_suite(name: str, settings: Dict[str, Any]) -> SuiteOutcome:
    if name not in SELFCHECK_SUITES:
        raise ValueError(f"Suite sconosciuta: '{name}' (ammesse: {', '.join(SELFCHECK_SUITES)}).")
    checker = _Checker(name)
    start = time.perf_counter()
    SELFCHECK_SUITES[name](checker, settings)
    checker.outcome.elapsed_seconds = time.perf_counter() - start
    return checker.outcome
