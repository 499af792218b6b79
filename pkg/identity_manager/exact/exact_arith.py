# -*- coding: utf-8 -*-
"""
exact_arith.py
--------------
Aritmetica scalare esatta:
  - Rational: alias di fractions.Fraction (forma canonica dopo ogni operazione)
  - PiLinear: elementi dell'anello Q ⊕ Q·π
  - primitive combinatorie: binomiali, doppi fattoriali, Pochhammer

Nessun valore floating point entra in questo modulo.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb, prod
from typing import Union

Rational = Fraction

RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Converte int, stringa "p/q" o Fraction in Fraction (i float sono rifiutati)."""
    if isinstance(value, bool):
        raise TypeError("Un booleano non è uno scalare razionale.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Tipo non ammesso per un razionale: {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Serializzazione esatta sempre nella forma "p/q"."""
    value = to_rational(value)
    return f"{value.numerator}/{value.denominator}"


# -----------------------------------------------------------------------------
# Primitive combinatorie
# -----------------------------------------------------------------------------
def binomial(n: int, k: int) -> Fraction:
    if n < 0:
        raise ValueError(f"binomial richiede n >= 0 (ricevuto n={n}).")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def double_factorial(n: int) -> Fraction:
    """n!! = n(n-2)(n-4)...; per convenzione (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double_factorial richiede n >= -1 (ricevuto n={n}).")
    return Fraction(prod(range(n, 0, -2)))


def pochhammer_rising(x: RationalLike, n: int) -> Fraction:
    """
    Fattoriale crescente (x)_n = x(x+1)...(x+n-1), prodotto vuoto = 1.

    Codifica Γ(x+n)/Γ(x) senza mai valutare Γ.
    """
    if n < 0:
        raise ValueError(f"pochhammer_rising richiede n >= 0 (ricevuto n={n}).")
    x = to_rational(x)
    result = Fraction(1)
    for j in range(n):
        result *= x + j
    return result


# -----------------------------------------------------------------------------
# Anello Q ⊕ Q·π
# -----------------------------------------------------------------------------
_PI_LINEAR_RE = re.compile(
    r"^\s*(?P<rat>[-+]?\d+(?:/\d+)?)\s*(?P<sign>[-+])\s*(?P<pi>\d+(?:/\d+)?)\s*\*\s*pi\s*$"
)


class PiLinear:
    """
    Numero della forma a + b·π con a, b razionali.

    L'uguaglianza è per componenti (π è irrazionale, la rappresentazione
    è unica). Il prodotto fra due elementi con parte in π non nulla è
    rifiutato: π² non compare mai negli integrali di questa libreria.
    """

    __slots__ = ("_rational_part", "_pi_part")

    def __init__(self, rational_part: RationalLike = 0, pi_part: RationalLike = 0) -> None:
        object.__setattr__(self, "_rational_part", to_rational(rational_part))
        object.__setattr__(self, "_pi_part", to_rational(pi_part))

    def __setattr__(self, name, value):
        raise AttributeError("PiLinear è immutabile.")

    def __reduce__(self):
        return (PiLinear, (self._rational_part, self._pi_part))

    @property
    def rational_part(self) -> Fraction:
        return self._rational_part

    @property
    def pi_part(self) -> Fraction:
        return self._pi_part

    @classmethod
    def pi_multiple(cls, coefficient: RationalLike) -> "PiLinear":
        return cls(0, coefficient)

    @staticmethod
    def _coerce(other) -> "PiLinear":
        if isinstance(other, PiLinear):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PiLinear(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PiLinear(self._rational_part + other._rational_part, self._pi_part + other._pi_part)

    __radd__ = __add__

    def __neg__(self) -> "PiLinear":
        return PiLinear(-self._rational_part, -self._pi_part)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._pi_part != 0 and other._pi_part != 0:
            raise ValueError("Prodotto con termine in π² non rappresentabile in PiLinear.")
        a, b = self._rational_part, self._pi_part
        c, d = other._rational_part, other._pi_part
        return PiLinear(a * c, a * d + b * c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._rational_part == other._rational_part and self._pi_part == other._pi_part

    def __hash__(self) -> int:
        # coerente con __eq__ verso i razionali puri
        if self._pi_part == 0:
            return hash(self._rational_part)
        return hash((self._rational_part, self._pi_part))

    def is_zero(self) -> bool:
        return self._rational_part == 0 and self._pi_part == 0

    def __repr__(self) -> str:
        return f"PiLinear({self._rational_part!r}, {self._pi_part!r})"

    def __str__(self) -> str:
        sign = "-" if self._pi_part < 0 else "+"
        return f"{format_rational(self._rational_part)} {sign} {format_rational(abs(self._pi_part))}*pi"

    @classmethod
    def parse(cls, text: str) -> "PiLinear":
        """Inverso di __str__: accetta "p/q + r/s*pi"."""
        match = _PI_LINEAR_RE.match(text)
        if not match:
            raise ValueError(f"Formato PiLinear non valido: '{text}'")
        pi_part = Fraction(match["pi"])
        if match["sign"] == "-":
            pi_part = -pi_part
        return cls(Fraction(match["rat"]), pi_part)


def format_exact(value: Union[Fraction, int, PiLinear]) -> str:
    """Stringa esatta per i report: "p/q" oppure "p/q + r/s*pi"."""
    if isinstance(value, PiLinear):
        return str(value)
    return format_rational(value)


_RATIONAL_RE = re.compile(r"^\s*[-+]?\d+(?:/\d+)?\s*$")


def parse_exact(text: str) -> Union[Fraction, PiLinear]:
    """Inverso di format_exact: rifiuta decimali ed esponenti (un report esatto non ne contiene)."""
    if "pi" not in text and not _RATIONAL_RE.match(text):
        raise ValueError(f"Valore esatto non valido: '{text}'")
    try:
        return PiLinear.parse(text) if "pi" in text else Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"Denominatore nullo: '{text}'") from None
