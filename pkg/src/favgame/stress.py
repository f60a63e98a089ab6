"""Random instance search for ratios above the closed-form bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._numeric import as_scalar
from .bounds import poa_formula, spoa_formula
from .equilibria import NoStrongEquilibrium, analyze, improving_coalition
from .model import Instance, Job, machine_loads

SIZE_DENOMINATOR = 10**6


def random_instance(rng: np.random.Generator, s, n: int, size_dist: str = "uniform") -> Instance:
    """Sizes are multiples of 1e-6 so equilibrium checks stay exact when ``s``
    is rational."""
    if size_dist == "uniform":
        ticks = rng.integers(1, SIZE_DENOMINATOR, size=n, endpoint=True)
    elif size_dist == "exp":
        ticks = np.maximum(1, np.rint(rng.exponential(size=n) * SIZE_DENOMINATOR)).astype(np.int64)
    else:
        raise ValueError(f"unknown size distribution {size_dist!r}")
    favorites = rng.integers(1, 2, size=n, endpoint=True)
    jobs = tuple(Job(Fraction(int(t), SIZE_DENOMINATOR), int(f)) for t, f in zip(ticks, favorites))
    return Instance(s, jobs)


@dataclass
class SearchSummary:
    s: object
    trials: int = 0
    max_poa: object = None
    max_spoa: object = None
    no_strong: int = 0
    #: instances whose ratio exceeds the closed form by more than the tolerance
    counterexamples: list = field(default_factory=list)
    #: strong equilibria whose lighter machine exceeds the optimum
    min_load_violations: list = field(default_factory=list)
    #: improving coalitions drawn from one machine only
    one_sided_coalitions: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.counterexamples or self.min_load_violations or self.one_sided_coalitions)


def check_instance(inst: Instance, summary: SearchSummary, tol: float = 1e-9,
                   structure: bool = False) -> None:
    try:
        rep = analyze(inst)
    except NoStrongEquilibrium:
        rep = analyze(inst, require_strong=False)
        summary.no_strong += 1
    summary.trials += 1
    if rep.opt == 0:
        return
    poa = rep.poa
    summary.max_poa = poa if summary.max_poa is None else max(summary.max_poa, poa)
    if float(poa) > float(poa_formula(inst.s)) + tol:
        summary.counterexamples.append(("poa", inst, poa))
    if rep.worst_se_makespan is not None:
        spoa = rep.spoa
        summary.max_spoa = spoa if summary.max_spoa is None else max(summary.max_spoa, spoa)
        if float(spoa) > float(spoa_formula(inst.s)) + tol:
            summary.counterexamples.append(("spoa", inst, spoa))
    if not structure:
        return
    for x in rep.strong_allocations:
        if float(min(machine_loads(inst, x))) > float(rep.opt) * (1 + 1e-12):
            summary.min_load_violations.append((inst, x))
    strong = set(rep.strong_allocations)
    for x in rep.nash_allocations:
        if x in strong:
            continue
        members = improving_coalition(inst, x)
        sides = {x[j] for j in members} if members else set()
        if len(sides) != 2:
            summary.one_sided_coalitions.append((inst, x, members))


def run_search(s, jobs: int, trials: int, seed: int = 0, size_dist: str = "uniform",
               structure: bool = False, tol: float = 1e-9) -> SearchSummary:
    """Draw ``trials`` random instances with ``jobs`` jobs each and compare
    their ratios with the closed forms. Deterministic for a fixed seed."""
    s = as_scalar(s)
    rng = np.random.default_rng(seed)
    summary = SearchSummary(s=s)
    for _ in range(trials):
        check_instance(random_instance(rng, s, jobs, size_dist), summary, tol, structure)
    return summary
