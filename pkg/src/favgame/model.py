"""Two-machine scheduling game with favorite machines.

Every job has a size and a favorite machine. It runs ``size`` time units on
its favorite machine and ``s * size`` on the other one, for a slowdown
factor ``s >= 1`` shared by all jobs.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from ._numeric import Scalar, as_scalar, is_exact, REL_TOL

DEFAULT_JOB_CAP = 20
JOB_CAP_ENV = "FAVGAME_JOB_CAP"


class CapExceeded(ValueError):
    """Raised when an exhaustive search would exceed the configured job cap."""


def job_cap(default: int = DEFAULT_JOB_CAP) -> int:
    raw = os.environ.get(JOB_CAP_ENV)
    if raw is None or not raw.strip():
        return default
    return int(raw)


def check_cap(n: int, cap: int | None = None) -> None:
    cap = job_cap() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"{n} jobs exceeds the enumeration cap of {cap}")


class Machine(enum.IntEnum):
    M1 = 1
    M2 = 2

    @property
    def other(self) -> "Machine":
        return Machine.M2 if self is Machine.M1 else Machine.M1

    def __str__(self) -> str:
        return self.name


M1, M2 = Machine.M1, Machine.M2

#: one machine per job, in job order
Allocation = tuple


def as_allocation(choices: Sequence) -> tuple[Machine, ...]:
    return tuple(Machine(c) for c in choices)


@dataclass(frozen=True)
class Job:
    size: Scalar
    favorite: Machine

    def __post_init__(self):
        size = as_scalar(self.size)
        if not size > 0:
            raise ValueError(f"job size must be positive, got {size}")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "favorite", Machine(self.favorite))


@dataclass(frozen=True)
class Instance:
    s: Scalar
    jobs: tuple[Job, ...] = ()

    def __post_init__(self):
        s = as_scalar(self.s)
        if s < 1:
            raise ValueError(f"slowdown factor must be >= 1, got {s}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "jobs", tuple(self.jobs))

    @classmethod
    def from_pairs(cls, s, pairs) -> "Instance":
        """Build from ``(size, favorite)`` pairs; favorites given as 1 or 2."""
        return cls(s, tuple(Job(size, fav) for size, fav in pairs))

    def __len__(self) -> int:
        return len(self.jobs)

    @property
    def exact(self) -> bool:
        return is_exact(self.s, *(j.size for j in self.jobs))

    def relabeled(self) -> "Instance":
        """Same instance with the two machine labels exchanged."""
        return Instance(self.s, tuple(Job(j.size, j.favorite.other) for j in self.jobs))

    def scaled(self, factor) -> "Instance":
        factor = as_scalar(factor)
        return Instance(self.s, tuple(Job(j.size * factor, j.favorite) for j in self.jobs))


def processing_time(job: Job, machine: Machine, s: Scalar) -> Scalar:
    if s < 1:
        raise ValueError(f"slowdown factor must be >= 1, got {s}")
    return job.size if Machine(machine) is job.favorite else s * job.size


def _check_length(inst: Instance, x: Sequence) -> None:
    if len(x) != len(inst.jobs):
        raise ValueError(f"allocation has {len(x)} entries for {len(inst.jobs)} jobs")


def machine_loads(inst: Instance, x: Sequence) -> tuple[Scalar, Scalar]:
    _check_length(inst, x)
    zero = Fraction(0) if inst.exact else 0.0
    loads = {M1: zero, M2: zero}
    for job, m in zip(inst.jobs, x):
        m = Machine(m)
        loads[m] = loads[m] + processing_time(job, m, inst.s)
    return loads[M1], loads[M2]


def makespan(inst: Instance, x: Sequence) -> Scalar:
    return max(machine_loads(inst, x))


def enumerate_allocations(n: int, cap: int | None = None) -> Iterator[tuple[Machine, ...]]:
    """Yield all ``2**n`` allocations in lexicographic order (M1 before M2)."""
    check_cap(n, cap)
    return itertools.product((M1, M2), repeat=n)


def allocation_from_index(index: int, n: int) -> tuple[Machine, ...]:
    """Inverse of the lexicographic enumeration: the first job is the most
    significant bit and a set bit means M2."""
    return tuple(M2 if (index >> (n - 1 - j)) & 1 else M1 for j in range(n))


# ---------------------------------------------------------------------------
# Vectorised tables used by the exhaustive searches.

@dataclass(frozen=True)
class ProcessingTable:
    """Processing times of every job on both machines, in a common unit.

    In exact mode all entries are integers and ``scale`` is the integer that
    converts back to the instance's units (value / scale). In floating mode
    entries are floats and ``scale`` is 1.
    """

    on_m1: tuple
    on_m2: tuple
    scale: int | float
    exact: bool

    def to_scalar(self, value) -> Scalar:
        if self.exact:
            return Fraction(int(value), self.scale)
        return float(value)

    def dtype(self):
        if not self.exact:
            return np.float64
        total = sum(self.on_m1) + sum(self.on_m2)
        return np.int64 if total < 2**62 else object


def processing_table(inst: Instance) -> ProcessingTable:
    s = inst.s
    if inst.exact:
        denom = math.lcm(1, *(j.size.denominator for j in inst.jobs)) * s.denominator
        fav = [int(j.size * denom) for j in inst.jobs]
        off = [int(j.size * s * denom) for j in inst.jobs]
        scale = denom
    else:
        fav = [float(j.size) for j in inst.jobs]
        off = [float(j.size) * float(s) for j in inst.jobs]
        scale = 1.0
    on_m1 = tuple(f if j.favorite is M1 else o for j, f, o in zip(inst.jobs, fav, off))
    on_m2 = tuple(f if j.favorite is M2 else o for j, f, o in zip(inst.jobs, fav, off))
    return ProcessingTable(on_m1, on_m2, scale, inst.exact)


def all_machine_loads(table: ProcessingTable) -> tuple[np.ndarray, np.ndarray]:
    """Loads of M1 and M2 for every allocation, indexed lexicographically."""
    dtype = table.dtype()
    l1 = np.zeros(1, dtype=dtype)
    l2 = np.zeros(1, dtype=dtype)
    # Build from the last job (least significant bit) upwards.
    for p1, p2 in zip(reversed(table.on_m1), reversed(table.on_m2)):
        l1 = np.concatenate([l1 + p1, l1])
        l2 = np.concatenate([l2, l2 + p2])
    return l1, l2


def optimum(inst: Instance, cap: int | None = None) -> tuple[Scalar, tuple[Machine, ...]]:
    """Minimum makespan and the lexicographically first allocation attaining it."""
    n = len(inst.jobs)
    check_cap(n, cap)
    table = processing_table(inst)
    l1, l2 = all_machine_loads(table)
    spans = np.maximum(l1, l2)
    if table.exact:
        best = int(np.argmin(spans))
    else:
        lo = spans.min()
        best = int(np.flatnonzero(spans <= lo + REL_TOL * max(1.0, abs(lo)))[0])
    return table.to_scalar(spans[best]), allocation_from_index(best, n)


# ---------------------------------------------------------------------------
# Eight-group decomposition of an allocation against a reference allocation.

GROUP_NAMES = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")


@dataclass(frozen=True)
class GroupDecomposition:
    """Loads (measured in the equilibrium allocation) of the eight job groups.

    ``a`` and ``b`` are bad jobs on M1 and M2, ``c`` and ``d`` good jobs on M1
    and M2. Suffix 2 for ``a``/``b`` and suffix 1 for ``c``/``d`` mark jobs
    that sit elsewhere in the reference allocation.
    """

    a1: Scalar = Fraction(0)
    a2: Scalar = Fraction(0)
    b1: Scalar = Fraction(0)
    b2: Scalar = Fraction(0)
    c1: Scalar = Fraction(0)
    c2: Scalar = Fraction(0)
    d1: Scalar = Fraction(0)
    d2: Scalar = Fraction(0)

    def __post_init__(self):
        for name in GROUP_NAMES:
            value = as_scalar(getattr(self, name))
            if value < 0:
                raise ValueError(f"group {name} has negative load {value}")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, name) for name in GROUP_NAMES)

    def as_dict(self) -> dict:
        return dict(zip(GROUP_NAMES, self.as_tuple()))


_GROUP_OF = {
    # (machine in x, good in x, moved) -> group
    (M1, False, True): "a2",
    (M1, False, False): "a1",
    (M1, True, True): "c1",
    (M1, True, False): "c2",
    (M2, False, True): "b2",
    (M2, False, False): "b1",
    (M2, True, True): "d1",
    (M2, True, False): "d2",
}


def decompose(inst: Instance, x: Sequence, y: Sequence) -> GroupDecomposition:
    _check_length(inst, x)
    _check_length(inst, y)
    zero = Fraction(0) if inst.exact else 0.0
    sums = dict.fromkeys(GROUP_NAMES, zero)
    for job, mx, my in zip(inst.jobs, x, y):
        mx, my = Machine(mx), Machine(my)
        group = _GROUP_OF[(mx, mx is job.favorite, mx is not my)]
        sums[group] = sums[group] + processing_time(job, mx, inst.s)
    return GroupDecomposition(**sums)


def loads_from_decomposition(d: GroupDecomposition, s: Scalar) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """Return ``(l1, l2, l1_ref, l2_ref)``: the machine loads of the source
    allocation and of the reference allocation."""
    s = as_scalar(s)
    if s < 1:
        raise ValueError(f"slowdown factor must be >= 1, got {s}")
    l1 = d.a1 + d.a2 + d.c1 + d.c2
    l2 = d.b1 + d.b2 + d.d1 + d.d2
    l1_ref = d.a1 + d.b2 / s + d.c2 + s * d.d1
    l2_ref = d.a2 / s + d.b1 + s * d.c1 + d.d2
    return l1, l2, l1_ref, l2_ref
