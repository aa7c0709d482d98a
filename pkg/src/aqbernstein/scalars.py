"""Dual-mode scalars: exact rationals and 64-bit floats.

Every numeric quantity in this library (q, alpha, evaluation points,
polynomial coefficients, eigenvalues) is a Scalar: either an exact rational
held as ``fractions.Fraction`` or a Python float. The two modes never mix
silently; combining scalars of different modes raises MixedModeError.

Python ints are accepted wherever a scalar is expected and absorb into the
surrounding mode (they are exact in either). Exact mode is the default
throughout; float mode exists for large-degree asymptotics runs and carries
an explicit comparison tolerance, since float results are only meaningful up
to rounding.

Serialized forms: an exact rational becomes ``{"num": "...", "den": "..."}``
(strings, so arbitrary precision survives JSON); a float stays a plain JSON
number. In CSV, exact values print as ``p/q`` and floats with 17 significant
digits, both of which round-trip losslessly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"


class MixedModeError(TypeError):
    """Raised when exact-rational and float scalars meet in one operation."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison tolerance for float-mode scalars.

    Two floats compare equal when they are within ``rel_tol`` relatively or
    ``abs_tol`` absolutely (the ``math.isclose`` convention).
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12

    def close(self, a: float, b: float) -> bool:
        return math.isclose(a, b, rel_tol=self.rel_tol, abs_tol=self.abs_tol)


DEFAULT_TOLERANCE = Tolerance()


def scalar_mode(x: Scalar | int) -> str:
    """Return ``"exact"`` or ``"float"``; ints count as exact."""
    if isinstance(x, float):
        return FLOAT
    if isinstance(x, (Fraction, int)):
        return EXACT
    raise TypeError(f"not a scalar: {x!r} of type {type(x).__name__}")


def coerce(x: Scalar | int, mode: str) -> Scalar:
    """Bring ``x`` into ``mode``, allowing only the int -> anything widening."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if mode == EXACT:
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        if isinstance(x, float):
            raise MixedModeError(f"float scalar {x!r} in exact-mode context")
    elif mode == FLOAT:
        if isinstance(x, int):
            return float(x)
        if isinstance(x, float):
            return x
        if isinstance(x, Fraction):
            raise MixedModeError(f"exact scalar {x!r} in float-mode context")
    else:
        raise ValueError(f"unknown scalar mode {mode!r}")
    raise TypeError(f"not a scalar: {x!r} of type {type(x).__name__}")


def common_mode(*values: Scalar | int) -> str | None:
    """Mode shared by all values, or None when every value is an int.

    Raises MixedModeError when both a Fraction and a float are present.
    """
    mode: str | None = None
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float, Fraction)):
            raise TypeError(f"not a scalar: {v!r} of type {type(v).__name__}")
        if isinstance(v, int):
            continue
        m = FLOAT if isinstance(v, float) else EXACT
        if mode is None:
            mode = m
        elif mode != m:
            raise MixedModeError(
                f"mixed scalar modes: saw both {mode} and {m} values"
            )
    return mode


def scalars_close(a: Scalar, b: Scalar, tol: Tolerance | None = None) -> bool:
    """Exact equality in exact mode, tolerance comparison in float mode."""
    mode = common_mode(a, b)
    if mode == FLOAT:
        return (tol or DEFAULT_TOLERANCE).close(float(a), float(b))
    return a == b


def parse_scalar(text: str, mode: str = EXACT) -> Scalar:
    """Parse ``"p/q"`` or a decimal string.

    In exact mode decimals convert exactly (``"0.4"`` -> 2/5); in float mode
    the text is read as a float.
    """
    text = text.strip()
    if mode == FLOAT:
        try:
            return float(text)
        except ValueError:
            return float(Fraction(text))
    if mode != EXACT:
        raise ValueError(f"unknown scalar mode {mode!r}")
    return Fraction(text)


def to_float(x: Scalar | int) -> float:
    return float(x)


def scalar_to_json(x: Scalar | int):
    """JSON-ready form: ``{"num", "den"}`` for exact values, number for floats."""
    if isinstance(x, float):
        return x
    if isinstance(x, (Fraction, int)):
        f = Fraction(x)
        return {"num": str(f.numerator), "den": str(f.denominator)}
    raise TypeError(f"not a scalar: {x!r}")


def scalar_from_json(obj) -> Scalar:
    """Inverse of :func:`scalar_to_json`."""
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    if isinstance(obj, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(obj, (int, float)):
        return float(obj)
    raise TypeError(f"cannot read scalar from {obj!r}")


def format_scalar(x: Scalar | int) -> str:
    """CSV text form: ``p/q`` for exact values, 17-significant-digit floats."""
    if isinstance(x, float):
        if x == 0.0:
            return "0"
        return format(x, ".17g")
    return str(Fraction(x))
