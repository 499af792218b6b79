# -*- coding: utf-8 -*-
"""
utils.py

Funzioni di supporto della CLI:
- costruzione del manager con la configurazione da variabili d'ambiente
- conversione degli sweep (oggetti esatti) nei report pydantic (stringhe esatte)
- rendering tabellare dei report e del registro

Dipendenze:
- identity_manager/identity_manager.py
- app/schemas.py
"""
import os
from typing import Dict, Iterable, List, Optional, Sequence

from app.schemas import (
    ExcludedRecord,
    IdentitySummary,
    ResultRecord,
    RunInfo,
    SelfcheckReport,
    SuiteRecord,
    Summary,
    VerifyReport,
)
from identity_manager.exact.cases import IdentityDescriptor, IdentitySweep, SuiteOutcome, VerificationResult
from identity_manager.exact.exact_arith import format_exact
from identity_manager.identity_manager import IdentityManager


# -----------------------------------------------------------------------------
# Manager (parametri anche da variabili d'ambiente)
# -----------------------------------------------------------------------------
def get_identity_manager() -> IdentityManager:
    config_path = os.getenv("LS_CONFIG_PATH", IdentityManager.DEFAULT_CONFIG_PATH)
    return IdentityManager(config_path=config_path)


# -----------------------------------------------------------------------------
# Conversione in report
# -----------------------------------------------------------------------------
def _params(result: VerificationResult) -> Dict[str, str]:
    return {name: str(value) for name, value in sorted(result.case.extra_params.items())}


def _exact_or_none(value) -> Optional[str]:
    return None if value is None else format_exact(value)


def to_result_record(result: VerificationResult) -> ResultRecord:
    return ResultRecord(
        identity_id=result.case.identity_id,
        params=_params(result),
        n=result.case.n,
        lhs=_exact_or_none(result.lhs),
        rhs=_exact_or_none(result.rhs),
        equal=result.equal,
        micros=result.micros,
    )


def to_excluded_record(result: VerificationResult) -> ExcludedRecord:
    return ExcludedRecord(
        identity_id=result.case.identity_id,
        params=_params(result),
        n=result.case.n,
        lhs=_exact_or_none(result.lhs),
        rhs=_exact_or_none(result.rhs),
        note=result.note,
    )


def build_verify_report(
    sweeps: Sequence[IdentitySweep],
    seed: int,
    n_max: int,
    elapsed_seconds: float,
) -> VerifyReport:
    results = [to_result_record(r) for sweep in sweeps for r in sweep.results]
    excluded = [to_excluded_record(r) for sweep in sweeps for r in sweep.excluded]
    per_identity = [
        IdentitySummary(
            identity_id=sweep.identity_id,
            passed=sweep.passes,
            failed=len(sweep.failures),
            skipped=len(sweep.excluded),
            elapsed_seconds=round(sweep.elapsed_seconds, 6),
        )
        for sweep in sweeps
    ]
    summary = Summary(
        passed=sum(1 for r in results if r.equal),
        fail=sum(1 for r in results if not r.equal),
        skipped=len(excluded),
    )
    return VerifyReport(
        run=RunInfo(seed=seed, n_max=n_max),
        results=results,
        summary=summary,
        per_identity=per_identity,
        excluded=excluded,
        elapsed_seconds=round(elapsed_seconds, 6),
    )


def build_selfcheck_report(outcomes: Iterable[SuiteOutcome], seed: int, skip_float: bool) -> SelfcheckReport:
    suites = [
        SuiteRecord(
            name=o.name,
            checks=o.checks,
            failures=list(o.failures),
            elapsed_seconds=round(o.elapsed_seconds, 6),
        )
        for o in outcomes
    ]
    return SelfcheckReport(run=RunInfo(seed=seed), suites=suites, skip_float=skip_float)


# -----------------------------------------------------------------------------
# Rendering testuale
# -----------------------------------------------------------------------------
def head(title: str) -> str:
    bar = "=" * 120
    return f"{bar}\n{title}\n{bar}"


def render_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
    return "\n".join(lines)


def render_registry(descriptors: Sequence[IdentityDescriptor]) -> str:
    return render_table(
        ("ID", "RIFERIMENTO", "PARAMETRI", "GUARDIE"),
        (
            (d.identity_id, d.anchor, ", ".join(("n",) + d.params), "; ".join(d.guards))
            for d in descriptors
        ),
    )


def _format_params(params: Dict[str, str]) -> str:
    return ", ".join(f"{k}={v}" for k, v in params.items()) or "-"


def render_verify_report(report: VerifyReport) -> str:
    parts: List[str] = [head(f"VERIFICA ESATTA (n_max={report.run.n_max}, seed={report.run.seed})")]
    parts.append(render_table(
        ("ID", "PASS", "FAIL", "SKIP", "SECONDI"),
        (
            (s.identity_id, s.passed, s.failed, s.skipped, f"{s.elapsed_seconds:.3f}")
            for s in report.per_identity
        ),
    ))
    if report.counterexamples:
        parts.append(head("CONTROESEMPI"))
        parts.append(render_table(
            ("ID", "n", "PARAMETRI", "LHS", "RHS"),
            ((r.identity_id, r.n, _format_params(r.params), r.lhs, r.rhs) for r in report.counterexamples),
        ))
    informational = [e for e in report.excluded if e.lhs is not None]
    if informational:
        parts.append(head("CASI ESCLUSI DALLE GUARDIE (informativi)"))
        parts.append(render_table(
            ("ID", "n", "PARAMETRI", "LHS", "RHS", "NOTA"),
            ((e.identity_id, e.n, _format_params(e.params), e.lhs, e.rhs, e.note or "") for e in informational),
        ))
    s = report.summary
    parts.append(f"pass={s.passed} fail={s.fail} skipped={s.skipped} tempo={report.elapsed_seconds:.3f}s")
    return "\n".join(parts)


def render_selfcheck_report(report: SelfcheckReport) -> str:
    parts: List[str] = [head(f"SELFCHECK (seed={report.run.seed})")]
    parts.append(render_table(
        ("SUITE", "CONTROLLI", "FALLIMENTI", "SECONDI"),
        ((s.name, s.checks, len(s.failures), f"{s.elapsed_seconds:.3f}") for s in report.suites),
    ))
    for suite in report.suites:
        for failure in suite.failures[:20]:
            parts.append(f"[{suite.name}] {failure}")
    parts.append("ESITO: " + ("OK" if report.passed else "FALLITO"))
    return "\n".join(parts)
