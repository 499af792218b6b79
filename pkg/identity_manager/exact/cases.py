# -*- coding: utf-8 -*-
"""
Modelli pydantic condivisi dal registro delle identità e dal manager.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from identity_manager.exact.exact_arith import PiLinear, to_rational

ParamValue = Union[int, Fraction]
ExactValue = Union[Fraction, PiLinear]


class IdentityDescriptor(BaseModel):
    """
    Voce del registro.

    **Campi**:
    - **identity_id**: chiave stabile (es. "gamma_mu").
    - **anchor**: riferimento al risultato (teorema, corollario, equazione).
    - **params**: nomi dei parametri oltre a n (es. ["x"], ["mu"], ["m"]).
    - **min_n**: primo indice ammesso.
    - **guards**: condizioni di ammissibilità in forma leggibile.
    """
    model_config = ConfigDict(frozen=True)

    identity_id: str = Field(..., description="Chiave stabile dell'identità.")
    anchor: str = Field(..., description="Riferimento al risultato da cui proviene l'identità.")
    params: Tuple[str, ...] = Field((), description="Parametri aggiuntivi oltre a n.")
    min_n: int = Field(1, description="Primo indice ammesso.")
    guards: Tuple[str, ...] = Field((), description="Condizioni di ammissibilità.")


class IdentityCase(BaseModel):
    """Un caso concreto: identità, indice n e parametri (x, mu razionali; m intero)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity_id: str
    n: int
    extra_params: Dict[str, ParamValue] = Field(default_factory=dict)

    @field_validator("extra_params", mode="before")
    @classmethod
    def _coerce_params(cls, value):
        out = {}
        for name, raw in dict(value or {}).items():
            if name == "m":
                out[name] = int(raw)
            else:
                out[name] = to_rational(raw)
        return out

    def param(self, name: str):
        return self.extra_params[name]

    def sort_key(self) -> tuple:
        return (self.identity_id, self.n, tuple(sorted((k, Fraction(v)) for k, v in self.extra_params.items())))


class VerificationResult(BaseModel):
    """Esito del confronto esatto LHS/RHS; equal ⇔ lhs == rhs."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    case: IdentityCase
    lhs: Optional[ExactValue] = None
    rhs: Optional[ExactValue] = None
    equal: bool = False
    micros: int = 0
    skipped: bool = False
    note: Optional[str] = None


class ClosedFormValues(BaseModel):
    """S_n = P_n(-3/2) e Q_n = P_n(-1/2) nelle forme chiuse a somma di binomiali."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    S_n: Fraction
    Q_n: Fraction


class SuiteOutcome(BaseModel):
    """Esito di una suite di invarianti (selfcheck)."""
    name: str
    checks: int = 0
    failures: List[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


class IdentitySweep(BaseModel):
    """Risultati di una singola identità su un intervallo di n."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    identity_id: str
    results: List[VerificationResult] = Field(default_factory=list)
    excluded: List[VerificationResult] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passes(self) -> int:
        return sum(1 for r in self.results if r.equal)

    @property
    def failures(self) -> List[VerificationResult]:
        return [r for r in self.results if not r.equal]
