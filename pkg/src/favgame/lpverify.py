"""Upper bounds on the anarchy ratios by maximising the heavier load over the
necessary equilibrium conditions.

Strict positivity of a group cannot be written in an LP, so each of a1, a2,
c1, c2 is branched as either fixed to zero or nonnegative with its
single-job condition imposed. The "or" of every coalition swap is branched
too. The largest branch optimum is an upper bound, because every true
equilibrium decomposition is feasible for at least one branch.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from ._numeric import Scalar, as_scalar
from .conditions import SIGN_GROUPS, SWAP_NAMES, base_conditions, stay_condition, swap_conditions
from .model import GROUP_NAMES
from .simplex import Constraint, LinearProgram, LpResult, solve_lp

#: maximise l1 = a1 + a2 + c1 + c2
OBJECTIVE = (1, 1, 0, 0, 1, 1, 0, 0)


class Mode(str, enum.Enum):
    SE = "se"
    NE = "ne"


@dataclass(frozen=True)
class BranchSpec:
    """``active[k]`` is False when ``SIGN_GROUPS[k]`` is fixed to zero;
    ``sides[k]`` picks alternative 0 (first) or 1 (second) of swap ``k``."""

    active: tuple
    sides: tuple = ()

    def describe(self) -> str:
        signs = "".join("1" if a else "0" for a in self.active)
        sides = "".join("ab"[k] for k in self.sides)
        return f"{signs}/{sides}" if sides else signs


def branches(mode) -> Iterator[BranchSpec]:
    mode = Mode(mode)
    side_choices = itertools.product((0, 1), repeat=len(SWAP_NAMES)) if mode is Mode.SE else [()]
    side_choices = list(side_choices)
    for active in itertools.product((False, True), repeat=len(SIGN_GROUPS)):
        for sides in side_choices:
            yield BranchSpec(active, sides)


def build_system(s, mode, branch: BranchSpec) -> LinearProgram:
    s = as_scalar(s)
    mode = Mode(mode)
    cons = [Constraint(c.coeffs, "<=", c.rhs, c.label)
            for c in base_conditions(s, strong=mode is Mode.SE)]
    for group, active in zip(SIGN_GROUPS, branch.active):
        if active:
            c = stay_condition(s, group)
            cons.append(Constraint(c.coeffs, "<=", c.rhs, c.label))
        else:
            row = tuple(1 if name == group else 0 for name in GROUP_NAMES)
            cons.append(Constraint(row, "=", 0, f"zero_{group}"))
    if mode is Mode.SE:
        if len(branch.sides) != len(SWAP_NAMES):
            raise ValueError("strong mode needs a side for every swap")
        for name, side in zip(SWAP_NAMES, branch.sides):
            c = swap_conditions(s, name)[side]
            cons.append(Constraint(c.coeffs, "<=", c.rhs, c.label))
    return LinearProgram(objective=OBJECTIVE, constraints=cons, names=GROUP_NAMES)


@dataclass
class BranchMaximum:
    value: Scalar
    branch: BranchSpec
    result: LpResult


def best_branch(s, mode) -> BranchMaximum:
    """Largest branch optimum; ties keep the first branch in enumeration order."""
    best = None
    for br in branches(mode):
        res = solve_lp(build_system(s, mode, br))
        if best is None or res.optimum > best.value:
            best = BranchMaximum(res.optimum, br, res)
    return best


def max_l1(s, mode) -> Scalar:
    """Upper bound on the strong (``"se"``) or plain (``"ne"``) price of
    anarchy at slowdown ``s``. Exact when ``s`` is rational."""
    return best_branch(s, mode).value


def _max_l1_args(args):
    return max_l1(*args)


def max_l1_grid(s_values, mode, workers: int | None = None) -> list:
    """:func:`max_l1` over many points, optionally in worker processes.
    Output order follows ``s_values``."""
    jobs = [(s, Mode(mode).value) for s in s_values]
    if workers == 1 or len(jobs) < 2:
        return [max_l1(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_max_l1_args, jobs, chunksize=max(1, len(jobs) // 32)))


@dataclass
class DualReport:
    optimum: Scalar
    #: multiplier per constraint label
    weights: dict
    point: dict
    #: right-hand side of the weighted sum of constraints; equals the optimum
    #: by strong duality
    bound: Scalar


def dual_weights(s, mode, branch: BranchSpec) -> DualReport:
    """Constraint multipliers of one branch LP. Diagnostic only: optimal duals
    need not be unique on degenerate branches."""
    lp = build_system(s, mode, branch)
    res = solve_lp(lp)
    weights = {c.label: y for c, y in zip(lp.constraints, res.duals)}
    bound = sum(y * c.rhs for c, y in zip(lp.constraints, res.duals))
    return DualReport(res.optimum, weights, res.value_of(GROUP_NAMES), bound)


__all__ = [
    "BranchSpec",
    "DualReport",
    "Mode",
    "best_branch",
    "branches",
    "build_system",
    "dual_weights",
    "max_l1",
    "max_l1_grid",
]
