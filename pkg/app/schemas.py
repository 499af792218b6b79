from datetime import datetime, timezone
from fractions import Fraction
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from identity_manager.exact.exact_arith import parse_exact


# =============================================================================
# CONFIGURAZIONE DI UNA ESECUZIONE
# =============================================================================
class RunConfig(BaseModel):
    """
    Parametri di una esecuzione di `verify`.

    **Campi**:
    - **identity_ids**: Lista di identificativi del registro, oppure ["all"].
    - **n_max**: Indice massimo dello sweep (n parte dal primo valore ammesso da ogni identità).
    - **x_grid / mu_grid / m_grid**: Override delle griglie di parametri (None = default).
      I razionali sono stringhe "p/q"; mu accetta anche "n", "n+1".
    - **output_format**: "table" oppure "json".
    - **jobs**: Numero di worker (processi) per lo sweep.
    - **fail_fast**: Interrompe dopo la prima identità con un controesempio.
    - **seed**: Seme riportato nel report.
    """
    identity_ids: List[str] = Field(
        default_factory=lambda: ["all"],
        description="Identità da verificare; ['all'] per l'intero registro."
    )
    n_max: int = Field(
        60, ge=1,
        description="Indice massimo dello sweep."
    )
    x_grid: Optional[List[str]] = Field(
        None,
        description="Valori razionali di x (es. '1/2'); None per la griglia di default."
    )
    mu_grid: Optional[List[str]] = Field(
        None,
        description="Valori di μ > 0, razionali o relativi a n ('n', 'n+1')."
    )
    m_grid: Optional[List[int]] = Field(
        None,
        description="Valori interi di m per log_moment; None per tutti gli m ammessi."
    )
    output_format: Literal["table", "json"] = Field(
        "table",
        description="Formato del report."
    )
    jobs: int = Field(
        1, ge=1,
        description="Numero di worker."
    )
    fail_fast: bool = Field(
        False,
        description="Interrompe alla prima identità con un controesempio."
    )
    seed: int = Field(
        0,
        description="Seme riportato nel report."
    )

    @field_validator("x_grid")
    @classmethod
    def _check_rationals(cls, value):
        if value is not None:
            for raw in value:
                Fraction(raw)
        return value

    @field_validator("mu_grid")
    @classmethod
    def _check_mu(cls, value):
        if value is not None:
            for raw in value:
                text = raw.replace(" ", "")
                if text.startswith("n"):
                    int(text[1:] or 0)
                elif Fraction(text) <= 0:
                    raise ValueError(f"μ deve essere > 0 (ricevuto {raw}).")
        return value


# =============================================================================
# REPORT DI VERIFICA
# =============================================================================
class RunInfo(BaseModel):
    """
    Intestazione del report.

    **Campi**:
    - **seed**: Seme usato (riportato per riproducibilità).
    - **n_max**: Indice massimo richiesto (None per selfcheck).
    - **timestamp**: Istante di inizio in ISO 8601 (UTC).
    """
    seed: int
    n_max: Optional[int] = None
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())


def _exact_text(value: Optional[str]) -> Optional[str]:
    # un lato illeggibile come valore esatto rende il report non valido
    if value is not None:
        parse_exact(value)
    return value


class ResultRecord(BaseModel):
    """
    Un caso verificato. I valori esatti sono stringhe "p/q" (o "p/q + r/s*pi"), mai decimali.
    """
    identity_id: str
    params: Dict[str, str] = Field(default_factory=dict)
    n: int
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    equal: bool
    micros: int = 0

    @field_validator("lhs", "rhs")
    @classmethod
    def _check_exact(cls, value):
        return _exact_text(value)


class ExcludedRecord(BaseModel):
    """Caso escluso dalle guardie: valori informativi, mai conteggiato come fallimento."""
    identity_id: str
    params: Dict[str, str] = Field(default_factory=dict)
    n: int
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    note: Optional[str] = None

    @field_validator("lhs", "rhs")
    @classmethod
    def _check_exact(cls, value):
        return _exact_text(value)


class IdentitySummary(BaseModel):
    identity_id: str
    passed: int
    failed: int
    skipped: int
    elapsed_seconds: float


class Summary(BaseModel):
    """Conteggi complessivi; 'pass' è una parola riservata, quindi il campo usa un alias."""
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    fail: int = 0
    skipped: int = 0


class VerifyReport(BaseModel):
    """
    Report JSON di `verify`:
    { run: {seed, n_max, timestamp}, results: [...], summary: {pass, fail, skipped} }
    più il dettaglio per identità, i casi esclusi e il tempo totale.
    """
    run: RunInfo
    results: List[ResultRecord] = Field(default_factory=list)
    summary: Summary = Field(default_factory=Summary)
    per_identity: List[IdentitySummary] = Field(default_factory=list)
    excluded: List[ExcludedRecord] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def counterexamples(self) -> List[ResultRecord]:
        return [r for r in self.results if not r.equal]

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


# =============================================================================
# REPORT DI SELFCHECK
# =============================================================================
class SuiteRecord(BaseModel):
    name: str
    checks: int
    failures: List[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0


class SelfcheckReport(BaseModel):
    run: RunInfo
    suites: List[SuiteRecord] = Field(default_factory=list)
    skip_float: bool = False

    @property
    def passed(self) -> bool:
        return all(not s.failures for s in self.suites)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
