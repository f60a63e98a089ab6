"""Scalar helpers shared by every module.

A scalar is either a :class:`fractions.Fraction` (exact mode) or a ``float``.
Integers are promoted to ``Fraction`` so exact arithmetic stays closed.
"""

from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

#: relative tolerance used for strict comparisons in floating mode
REL_TOL = 1e-12


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to a scalar.

    Accepts ints, Fractions, Decimals, floats and strings such as ``"3/2"``,
    ``"1.25"`` or ``"phi"``. Decimal strings are parsed exactly.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite scalar {value!r}")
        return value
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in ("phi", "golden"):
            return (1 + math.sqrt(5)) / 2
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {value!r}") from exc
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def is_exact(*values) -> bool:
    return all(isinstance(v, (Fraction, int)) for v in values)


def lt(a: Scalar, b: Scalar, rel_tol: float = REL_TOL) -> bool:
    """Strict ``a < b``; in floating mode ``a`` must undercut ``b`` by more
    than ``rel_tol`` (relative to the magnitudes, floor 1)."""
    if is_exact(a, b):
        return a < b
    return a < b - rel_tol * max(1.0, abs(a), abs(b))


def le(a: Scalar, b: Scalar, rel_tol: float = REL_TOL) -> bool:
    return not lt(b, a, rel_tol)


def close(a: Scalar, b: Scalar, tol: float = 1e-9) -> bool:
    """Exact equality for two exact values, otherwise ``|a-b| <= tol``."""
    if is_exact(a, b):
        return a == b
    return abs(float(a) - float(b)) <= tol


def horner(coeffs, x: Scalar) -> Scalar:
    """Evaluate a polynomial with coefficients in decreasing degree order."""
    acc = 0 if is_exact(x) else 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc
