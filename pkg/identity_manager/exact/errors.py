# -*- coding: utf-8 -*-
"""
Gerarchia degli errori della libreria esatta.

Tutti gli errori di dominio derivano da IdentityError; le violazioni di
precondizione delle singole operazioni matematiche restano ValueError.
"""
from __future__ import annotations


class IdentityError(RuntimeError):
    """Errore generico della libreria di verifica delle identità."""


class UnknownIdentityError(IdentityError, KeyError):
    """Identità non presente nel registro."""

    def __init__(self, identity_id: str) -> None:
        super().__init__(f"Identità sconosciuta: '{identity_id}'")
        self.identity_id = identity_id

    def __str__(self) -> str:
        return self.args[0]


class GuardViolation(IdentityError, ValueError):
    """Caso fuori dall'intervallo ammesso dall'identità (la condizione violata è nel messaggio)."""

    def __init__(self, identity_id: str, condition: str) -> None:
        super().__init__(f"{identity_id}: condizione violata '{condition}'")
        self.identity_id = identity_id
        self.condition = condition


class QuadratureError(IdentityError):
    """La quadratura numerica non ha raggiunto la tolleranza richiesta."""


class ConfigurationError(IdentityError, ValueError):
    """Valore non valido nel file di configurazione o in una variabile d'ambiente LS_*."""

    def __init__(self, key: str, value: object) -> None:
        super().__init__(f"valore non valido per '{key}': {value!r}")
        self.key = key
        self.value = value
