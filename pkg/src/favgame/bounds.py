"""Closed-form strong price of anarchy and price of anarchy as functions of s."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import bisect

from ._numeric import Scalar, as_scalar, horner

PHI = (1 + math.sqrt(5)) / 2


class BracketError(RuntimeError):
    """Adjacent pieces do not change sign across the expected bracket."""


def _check_s(s) -> Scalar:
    s = as_scalar(s)
    if s < 1:
        raise ValueError(f"slowdown factor must be >= 1, got {s}")
    return s


@dataclass(frozen=True)
class BoundPiece:
    """Rational function ``numerator(s) / denominator(s)`` (coefficients in
    decreasing degree) valid on one segment of s."""

    index: int
    numerator: tuple
    denominator: tuple
    label: str

    def __call__(self, s: Scalar) -> Scalar:
        return horner(self.numerator, s) / horner(self.denominator, s)


SPOA_PIECES = (
    BoundPiece(1, (1, 1, 1, 1), (1, 0, 0, 2), "(s^3+s^2+s+1)/(s^3+2)"),
    BoundPiece(2, (1, 2, 1), (2, 1), "(s^2+2s+1)/(2s+1)"),
    BoundPiece(3, (1, 1), (1, 0), "(s+1)/s"),
    BoundPiece(4, (1, -1, 2, -1), (1, -1, 1, -1), "(s^3-s^2+2s-1)/(s^3-s^2+s-1)"),
    BoundPiece(5, (1, 1), (2,), "(s+1)/2"),
    BoundPiece(6, (1, -1, 1), (1, -1, 0), "(s^2-s+1)/(s^2-s)"),
    BoundPiece(7, (1, 0, 0), (2, -1), "s^2/(2s-1)"),
    BoundPiece(8, (1, 1), (1, 0), "(s+1)/s"),
)

POA_PIECE = BoundPiece(0, (1, 1, 1, 1), (1, 1, 1), "(s^3+s^2+s+1)/(s^2+s+1)")

# Bisection brackets (width <= 0.5) around the published approximations.
_BRACKETS = {1: (1.2, 1.45), 3: (1.7, 1.8), 4: (1.85, 1.95), 6: (2.1, 2.2), 7: (2.2, 2.3)}


@dataclass(frozen=True)
class Breakpoints:
    s1: float
    s2: float
    s3: float
    s4: float
    s5: Scalar
    s6: float
    s7: float

    def as_tuple(self) -> tuple:
        return (self.s1, self.s2, self.s3, self.s4, self.s5, self.s6, self.s7)

    def segment(self, k: int) -> tuple:
        """Closed interval ``(lo, hi)`` of piece ``k``; piece 8 is unbounded."""
        if not 1 <= k <= 8:
            raise ValueError(f"piece index must be in 1..8, got {k}")
        edges = (Fraction(1),) + self.as_tuple() + (math.inf,)
        return edges[k - 1], edges[k]


def piece_difference_root(k: int, lo: float, hi: float, xtol: float = 1e-12) -> float:
    """Root of ``piece_k - piece_{k+1}`` inside ``[lo, hi]``."""
    left, right = SPOA_PIECES[k - 1], SPOA_PIECES[k]
    try:
        return bisect(lambda s: left(s) - right(s), lo, hi, xtol=xtol)
    except ValueError as exc:
        raise BracketError(f"no sign change for pieces {k}/{k + 1} on [{lo}, {hi}]") from exc


@functools.lru_cache(maxsize=1)
def compute_breakpoints() -> Breakpoints:
    roots = {k: piece_difference_root(k, *bracket) for k, bracket in _BRACKETS.items()}
    return Breakpoints(
        s1=roots[1], s2=PHI, s3=roots[3], s4=roots[4], s5=Fraction(2), s6=roots[6], s7=roots[7],
    )


def segment_of(s) -> int:
    """Index 1..8 of the piece containing ``s``; a breakpoint belongs to the
    lower piece."""
    s = _check_s(s)
    for k, edge in enumerate(compute_breakpoints().as_tuple(), start=1):
        if s <= edge:
            return k
    return 8


def spoa_simple(s) -> Scalar:
    s = _check_s(s)
    return (s + 1) / s


def spoa_formula(s) -> Scalar:
    s = _check_s(s)
    return SPOA_PIECES[segment_of(s) - 1](s)


def poa_formula(s) -> Scalar:
    return POA_PIECE(_check_s(s))


def grid_with_breakpoints(lo: float, hi: float, n: int) -> np.ndarray:
    """``n`` sorted points on ``[lo, hi]``: a uniform grid where the point
    nearest to each breakpoint inside the range is moved onto it, so the kinks
    of the piecewise curve are sampled."""
    grid = np.linspace(lo, hi, n)
    taken = set()
    for b in compute_breakpoints().as_tuple():
        b = float(b)
        if lo <= b <= hi:
            idx = int(np.abs(grid - b).argmin())
            if idx in taken:
                raise ValueError(f"grid of {n} points is too coarse to separate the breakpoints")
            taken.add(idx)
            grid[idx] = b
    return grid
