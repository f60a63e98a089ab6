"""Pure Nash and strong Nash equilibria by exhaustive deviation checks.

Improvement is always strict: a coalition blocks an allocation only if every
member ends up on a strictly less loaded machine. With two machines a
deviating job simply switches machine, so a coalition is a set of job
indices (0-based, in instance order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._numeric import REL_TOL, Scalar, lt
from .model import (
    M1,
    M2,
    CapExceeded,
    Instance,
    Machine,
    all_machine_loads,
    allocation_from_index,
    check_cap,
    job_cap,
    machine_loads,
    makespan,
    processing_table,
    processing_time,
    _check_length,
)

#: default cap for strong-equilibrium analysis (2**n allocations, each with
#: up to 2**n candidate coalitions)
DEFAULT_SE_JOB_CAP = 14


class NoStrongEquilibrium(RuntimeError):
    """No allocation of the instance survived the coalition check."""


def se_job_cap() -> int:
    return job_cap(DEFAULT_SE_JOB_CAP)


def job_cost(inst: Instance, x: Sequence, j: int) -> Scalar:
    if not 0 <= j < len(inst.jobs):
        raise IndexError(f"job index {j} out of range")
    l1, l2 = machine_loads(inst, x)
    return l1 if Machine(x[j]) is M1 else l2


def deviate(x: Sequence, coalition) -> tuple[Machine, ...]:
    """Switch the machine of every coalition member."""
    members = set(coalition)
    if not members:
        raise ValueError("a deviating coalition must be nonempty")
    if min(members) < 0 or max(members) >= len(x):
        raise IndexError("coalition member out of range")
    return tuple(Machine(m).other if i in members else Machine(m) for i, m in enumerate(x))


def is_nash(inst: Instance, x: Sequence, rel_tol: float = REL_TOL) -> bool:
    l1, l2 = machine_loads(inst, x)
    for job, m in zip(inst.jobs, x):
        m = Machine(m)
        if m is M1:
            if lt(l2 + processing_time(job, M2, inst.s), l1, rel_tol):
                return False
        elif lt(l1 + processing_time(job, M1, inst.s), l2, rel_tol):
            return False
    return True


def _coalition_improves(inst, x, loads, members, rel_tol) -> bool:
    l1, l2 = loads
    to_m2 = [j for j in members if Machine(x[j]) is M1]
    to_m1 = [j for j in members if Machine(x[j]) is M2]
    s = inst.s
    new_l2 = l2 + sum(processing_time(inst.jobs[j], M2, s) for j in to_m2) \
        - sum(processing_time(inst.jobs[j], M2, s) for j in to_m1)
    new_l1 = l1 + sum(processing_time(inst.jobs[j], M1, s) for j in to_m1) \
        - sum(processing_time(inst.jobs[j], M1, s) for j in to_m2)
    if to_m2 and not lt(new_l2, l1, rel_tol):
        return False
    if to_m1 and not lt(new_l1, l2, rel_tol):
        return False
    return True


def _candidates(inst, x, loads) -> list[int]:
    # A job that moves pays at least its own processing time on the other
    # machine, so it can only gain if that alone undercuts its current load.
    l1, l2 = loads
    out = []
    for j, (job, m) in enumerate(zip(inst.jobs, x)):
        m = Machine(m)
        current = l1 if m is M1 else l2
        if lt(processing_time(job, m.other, inst.s), current):
            out.append(j)
    return out


def improving_coalition(inst: Instance, x: Sequence, cap: int | None = None,
                        prune: bool = True, rel_tol: float = REL_TOL):
    """Smallest coalition (by size, then lexicographically) whose members all
    strictly lower their cost by switching machines, or ``None``."""
    _check_length(inst, x)
    check_cap(len(inst.jobs), se_job_cap() if cap is None else cap)
    loads = machine_loads(inst, x)
    pool = _candidates(inst, x, loads) if prune else list(range(len(inst.jobs)))
    for size in range(1, len(pool) + 1):
        for members in itertools.combinations(pool, size):
            if _coalition_improves(inst, x, loads, members, rel_tol):
                return members
    return None


def is_strong_nash(inst: Instance, x: Sequence, cap: int | None = None,
                   rel_tol: float = REL_TOL) -> bool:
    return improving_coalition(inst, x, cap=cap, rel_tol=rel_tol) is None


# ---------------------------------------------------------------------------
# Vectorised search over all allocations.

def _strict_less(new, old, exact, rel_tol):
    if exact:
        return new < old
    slack = rel_tol * np.maximum(1.0, np.maximum(np.abs(new), np.abs(old)))
    return new < old - slack


def _subset_sums(values, dtype) -> np.ndarray:
    out = np.zeros(1, dtype=dtype)
    for v in values:
        out = np.concatenate([out, out + v])
    return out


def _blocked(table, x, l1, l2, rel_tol) -> bool:
    """True if some coalition improves on allocation ``x`` (any size)."""
    dtype = table.dtype()
    on1 = [j for j, m in enumerate(x) if m is M1]
    on2 = [j for j, m in enumerate(x) if m is M2]
    # Subsets J1 of M1's jobs (moving to M2) and J2 of M2's jobs (moving to M1).
    u = _subset_sums([table.on_m2[j] for j in on1], dtype)  # J1's load on M2
    v = _subset_sums([table.on_m1[j] for j in on1], dtype)  # J1's load on M1
    w = _subset_sums([table.on_m2[j] for j in on2], dtype)  # J2's load on M2
    z = _subset_sums([table.on_m1[j] for j in on2], dtype)  # J2's load on M1
    new_l2 = l2 + u[:, None] - w[None, :]
    new_l1 = l1 - v[:, None] + z[None, :]
    ok1 = _strict_less(new_l2, l1, table.exact, rel_tol)
    ok2 = _strict_less(new_l1, l2, table.exact, rel_tol)
    ok1[0, :] = True  # J1 empty: nobody on M1 needs to gain
    ok2[:, 0] = True
    both = ok1 & ok2
    both[0, 0] = False
    return bool(both.any())


@dataclass
class EquilibriumReport:
    nash_allocations: list
    strong_allocations: list
    opt: Scalar
    worst_ne_makespan: Scalar
    worst_se_makespan: Scalar | None
    opt_allocation: tuple = field(default=())

    @property
    def poa(self) -> Scalar:
        return _ratio(self.worst_ne_makespan, self.opt)

    @property
    def spoa(self) -> Scalar:
        if self.worst_se_makespan is None:
            raise NoStrongEquilibrium("instance has no strong equilibrium")
        return _ratio(self.worst_se_makespan, self.opt)


def _ratio(num, den):
    if den == 0:
        raise ZeroDivisionError("optimal makespan is zero; ratio undefined")
    return num / den


def analyze(inst: Instance, cap: int | None = None, require_strong: bool = True,
            rel_tol: float = REL_TOL) -> EquilibriumReport:
    """Enumerate every allocation and classify Nash and strong equilibria."""
    n = len(inst.jobs)
    check_cap(n, se_job_cap() if cap is None else cap)
    table = processing_table(inst)
    l1, l2 = all_machine_loads(table)
    idx = np.arange(2**n)
    ne = np.ones(2**n, dtype=bool)
    for j in range(n):
        on_m2 = ((idx >> (n - 1 - j)) & 1).astype(bool)
        gain_to_m2 = _strict_less(l2 + table.on_m2[j], l1, table.exact, rel_tol)
        gain_to_m1 = _strict_less(l1 + table.on_m1[j], l2, table.exact, rel_tol)
        ne &= ~np.where(on_m2, gain_to_m1, gain_to_m2)
    spans = np.maximum(l1, l2)
    best = int(np.argmin(spans))

    nash, strong = [], []
    worst_ne = worst_se = None
    for i in np.flatnonzero(ne):
        x = allocation_from_index(int(i), n)
        nash.append(x)
        worst_ne = spans[i] if worst_ne is None else max(worst_ne, spans[i])
        if not _blocked(table, x, l1[i], l2[i], rel_tol):
            strong.append(x)
            worst_se = spans[i] if worst_se is None else max(worst_se, spans[i])
    if not strong and require_strong:
        raise NoStrongEquilibrium(f"no strong equilibrium among {len(nash)} Nash equilibria")
    return EquilibriumReport(
        nash_allocations=nash,
        strong_allocations=strong,
        opt=table.to_scalar(spans[best]),
        worst_ne_makespan=table.to_scalar(worst_ne),
        worst_se_makespan=None if worst_se is None else table.to_scalar(worst_se),
        opt_allocation=allocation_from_index(best, n),
    )


def poa_of_instance(inst: Instance, cap: int | None = None) -> Scalar:
    return analyze(inst, cap=cap).poa


def spoa_of_instance(inst: Instance, cap: int | None = None) -> Scalar:
    return analyze(inst, cap=cap).spoa


__all__ = [
    "CapExceeded",
    "EquilibriumReport",
    "NoStrongEquilibrium",
    "analyze",
    "deviate",
    "improving_coalition",
    "is_nash",
    "is_strong_nash",
    "job_cost",
    "makespan",
    "poa_of_instance",
    "spoa_of_instance",
]
