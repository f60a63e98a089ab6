"""Dense two-phase simplex with Bland's rule.

Works on exact :class:`~fractions.Fraction` data (no tolerances) or on floats
(pivot tolerance ``1e-12``). Problems have the form::

    maximize    c . x
    subject to  A_i . x  (<= | >= | =)  b_i
                x >= 0
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ._numeric import is_exact

try:  # GMP rationals are an order of magnitude faster than Fraction
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction

FLOAT_EPS = 1e-12


class SolverError(RuntimeError):
    pass


class Infeasible(SolverError):
    pass


class Unbounded(SolverError):
    pass


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: object
    label: str = ""

    def __post_init__(self):
        if self.relation not in ("<=", ">=", "="):
            raise ValueError(f"bad relation {self.relation!r}")


@dataclass
class LinearProgram:
    objective: tuple
    constraints: list
    names: tuple = field(default=())

    @property
    def n_vars(self) -> int:
        return len(self.objective)


@dataclass
class LpResult:
    optimum: object
    x: tuple
    duals: tuple
    pivots: int

    def value_of(self, names: Sequence[str]) -> dict:
        return dict(zip(names, self.x))


def _is_exact_lp(lp: LinearProgram) -> bool:
    values = list(lp.objective)
    for con in lp.constraints:
        values.extend(con.coeffs)
        values.append(con.rhs)
    return is_exact(*values)


class _Tableau:
    def __init__(self, rows, rhs, exact):
        self.rows = rows            # m lists of length N (constraint columns)
        self.rhs = rhs              # m values
        self.exact = exact
        self.eps = 0 if exact else FLOAT_EPS
        self.basis = []
        self.pivots = 0

    def pivot(self, r: int, col: int) -> None:
        rows, rhs = self.rows, self.rhs
        piv = rows[r][col]
        prow = [v / piv for v in rows[r]]
        rows[r] = prow
        rhs[r] = rhs[r] / piv
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[col]
            if f:
                rows[i] = [a - f * b if b else a for a, b in zip(row, prow)]
                rhs[i] = rhs[i] - f * rhs[r]
        self.basis[r] = col
        self.pivots += 1

    def reduced_costs(self, cost):
        n_cols = len(cost)
        z = [-c for c in cost]
        value = 0 * cost[0] if cost else 0
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(n_cols):
                    z[j] += cb * row[j]
                value += cb * self.rhs[i]
        return z, value

    def optimize(self, cost, allowed) -> None:
        """Maximise ``cost`` from the current feasible basis."""
        eps = self.eps
        while True:
            z, _ = self.reduced_costs(cost)
            entering = next((j for j in allowed if z[j] < -eps), None)
            if entering is None:
                return
            best_row, best_ratio = None, None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > eps:
                    ratio = self.rhs[i] / a
                    if (best_row is None or ratio < best_ratio
                            or (ratio == best_ratio and self.basis[i] < self.basis[best_row])):
                        best_row, best_ratio = i, ratio
            if best_row is None:
                raise Unbounded("objective is unbounded")
            self.pivot(best_row, entering)


def solve_lp(lp: LinearProgram) -> LpResult:
    """Solve ``lp``; raise :class:`Infeasible` or :class:`Unbounded`.

    Dual multipliers are returned one per constraint, in the orientation the
    constraint was written (``>= 0`` for ``<=`` rows, ``<= 0`` for ``>=``
    rows, free for equalities).
    """
    exact = _is_exact_lp(lp)
    conv = _rational if exact else float
    n = lp.n_vars
    m = len(lp.constraints)

    # Normalise to nonnegative right-hand sides.
    norm = []
    for con in lp.constraints:
        coeffs = [conv(c) for c in con.coeffs]
        rhs = conv(con.rhs)
        rel, sign = con.relation, 1
        if rhs < 0:
            coeffs, rhs, sign = [-c for c in coeffs], -rhs, -1
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        norm.append((coeffs, rel, rhs, sign))

    # Columns: originals, one slack/surplus per inequality, one artificial
    # per >= or = row.
    n_slack = sum(1 for _, rel, _, _ in norm if rel != "=")
    n_art = sum(1 for _, rel, _, _ in norm if rel != "<=")
    width = n + n_slack + n_art
    zero, one = conv(0), conv(1)
    rows, rhs, basis, unit_col = [], [], [], []
    slack_at, art_at = n, n + n_slack
    artificials = set()
    for coeffs, rel, b, _ in norm:
        row = coeffs + [zero] * (n_slack + n_art)
        if rel == "<=":
            row[slack_at] = one
            basis.append(slack_at)
            unit_col.append(slack_at)
            slack_at += 1
        else:
            if rel == ">=":
                row[slack_at] = -one
                slack_at += 1
            row[art_at] = one
            basis.append(art_at)
            unit_col.append(art_at)
            artificials.add(art_at)
            art_at += 1
        rows.append(row)
        rhs.append(b)

    tab = _Tableau(rows, rhs, exact)
    tab.basis = basis
    every = range(width)
    if artificials:
        phase1 = [-one if j in artificials else zero for j in every]
        tab.optimize(phase1, list(every))
        _, value = tab.reduced_costs(phase1)
        if value < -tab.eps * max(1, m):
            raise Infeasible("constraints are infeasible")
        # Drive zero-valued artificials out of the basis where possible.
        for i, b in enumerate(tab.basis):
            if b in artificials:
                col = next((j for j in range(n + n_slack) if abs(tab.rows[i][j]) > tab.eps), None)
                if col is not None:
                    tab.pivot(i, col)

    cost = [conv(c) for c in lp.objective] + [zero] * (n_slack + n_art)
    allowed = [j for j in every if j not in artificials]
    tab.optimize(cost, allowed)
    z, value = tab.reduced_costs(cost)

    x = [zero] * n
    for i, b in enumerate(tab.basis):
        if b < n:
            x[b] = tab.rhs[i]
    duals = [sign * z[unit_col[i]] for i, (_, _, _, sign) in enumerate(norm)]
    out = _to_fraction if exact else float
    return LpResult(optimum=out(value), x=tuple(map(out, x)),
                    duals=tuple(map(out, duals)), pivots=tab.pivots)


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))
