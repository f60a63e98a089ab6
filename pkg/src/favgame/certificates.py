"""Lower-bound instances and their end-to-end verification.

A certificate is a concrete instance together with an equilibrium whose
makespan matches a closed-form bound and a reference allocation of makespan
1. Verification redoes everything by brute force.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ._numeric import Scalar, as_scalar, close
from .bounds import SPOA_PIECES, compute_breakpoints, poa_formula
from .equilibria import is_nash, is_strong_nash
from .model import M1, M2, Instance, Job, machine_loads, makespan, optimum


class SegmentError(ValueError):
    """The slowdown factor lies outside the segment the certificate needs."""


def _lb1(s):
    den = s**3 + 2
    return dict(a2=(s**3 + s**2) / den, b2=s / den, c2=(s + 1) / den, d1=(s**2 - 1) / den,
                d2=(s**3 - s**2 - s + 2) / den, l1=(s**3 + s**2 + s + 1) / den, l2=(s**3 + 1) / den)


def _lb2(s):
    den = 2 * s + 1
    return dict(a2=(s**2 + s) / den, b2=s**2 / den, c2=(s + 1) / den, d1=0 * s,
                d2=s / den, l1=(s**2 + 2 * s + 1) / den, l2=(s**2 + s) / den)


def _lb3(s):
    return dict(a2=s / s, b2=s - 1, c2=1 / s, d1=0 * s, d2=2 - s, l1=(s + 1) / s, l2=s / s)


def _lb4(s):
    return dict(a2=(s**2 / (s - 1)) / (s**2 + 1), b2=s**2 / (s**2 + 1),
                c2=(s**2 - s + 1) / (s**2 + 1), d1=0 * s, d2=1 / (s**2 + 1),
                l1=(s**3 - s**2 + 2 * s - 1) / (s**3 - s**2 + s - 1), l2=s / s)


def _lb5(s):
    return dict(a2=s / 2, b2=s / 2, c2=s / s / 2, d1=0 * s, d2=(2 - s) / 2, l1=(s + 1) / 2, l2=s / s)


def _lb6(s):
    return dict(a2=1 / (s - 1), b2=s / s, c2=(s - 1) / s, d1=0 * s, d2=0 * s,
                l1=(s**2 - s + 1) / (s**2 - s), l2=s / s)


def _lb7(s):
    den = 2 * s - 1
    return dict(a2=s**2 / den, b2=0 * s, c2=0 * s, d1=(s - 1) ** 2 / den, d2=(s - 1) / den,
                l1=s**2 / den, l2=(s**2 - s) / den)


def _lb8(s):
    return dict(a2=(s + 1) / s, b2=0 * s, c2=0 * s, d1=1 / s, d2=(s**2 - s - 1) / s**2,
                l1=(s + 1) / s, l2=(s**2 - 1) / s**2)


#: Lower-bound rows 1..8: equilibrium loads of the groups a2, b2, c2, d1, d2 (each a
#: single job) plus the two machine loads.
LOWER_BOUND_ROWS: dict[int, Callable] = {
    1: _lb1, 2: _lb2, 3: _lb3, 4: _lb4, 5: _lb5, 6: _lb6, 7: _lb7, 8: _lb8,
}

# group -> (favorite machine, machine in the equilibrium, machine in the
# reference optimum, bad in the equilibrium)
_LAYOUT = {
    "a1": (M2, M1, M1, True),
    "a2": (M2, M1, M2, True),
    "b1": (M1, M2, M2, True),
    "b2": (M1, M2, M1, True),
    "c2": (M1, M1, M1, False),
    "d1": (M2, M2, M1, False),
    "d2": (M2, M2, M2, False),
}


@dataclass
class Certificate:
    instance: Instance
    equilibrium: tuple
    reference_opt: tuple
    expected_l1: Scalar
    expected_l2: Scalar
    expected_ratio: Scalar
    kind: str  # "NE" or "SE"
    segment: object  # 1..8, "poa" or "example1"
    s_interval: tuple
    labels: tuple = field(default=())


def _build(s, loads: dict, order) -> tuple[Instance, tuple, tuple, tuple]:
    jobs, eq, ref, labels = [], [], [], []
    for name in order:
        load = loads[name]
        if load == 0:
            continue
        if load < 0:
            raise SegmentError(f"group {name} has negative load {load} at s={s}")
        fav, on_eq, on_ref, bad = _LAYOUT[name]
        jobs.append(Job(load / s if bad else load, fav))
        eq.append(on_eq)
        ref.append(on_ref)
        labels.append(name)
    return Instance(s, tuple(jobs)), tuple(eq), tuple(ref), tuple(labels)


def spoa_certificate(k: int, s) -> Certificate:
    """Lower-bound instance for piece ``k`` of the strong price of anarchy curve."""
    s = as_scalar(s)
    lo, hi = compute_breakpoints().segment(k)
    if not lo <= s <= hi:
        raise SegmentError(f"s={s} is outside segment {k} = [{float(lo):.6f}, {float(hi):.6f}]")
    row = LOWER_BOUND_ROWS[k](s)
    inst, eq, ref, labels = _build(s, row, ("a2", "b2", "c2", "d1", "d2"))
    return Certificate(inst, eq, ref, row["l1"], row["l2"], SPOA_PIECES[k - 1](s),
                       "SE", k, (lo, hi), labels)


def poa_certificate(s) -> Certificate:
    s = as_scalar(s)
    if s < 1:
        raise SegmentError(f"s={s} < 1")
    den = s**2 + s + 1
    loads = dict(a2=(s**3 + s**2) / den, b1=1 / den, b2=s**3 / den, c2=(s + 1) / den)
    inst, eq, ref, labels = _build(s, loads, ("a2", "b1", "b2", "c2"))
    return Certificate(inst, eq, ref, loads["a2"] + loads["c2"], loads["b1"] + loads["b2"],
                       poa_formula(s), "NE", "poa", (Fraction(1), float("inf")), labels)


def bad_ne_example(s) -> Certificate:
    """Two unit jobs with different favorites, each placed on the other one's
    favorite machine."""
    s = as_scalar(s)
    if s < 1:
        raise SegmentError(f"s={s} < 1")
    one = s / s
    inst = Instance(s, (Job(one, M1), Job(one, M2)))
    return Certificate(inst, (M2, M1), (M1, M2), s, s, s, "NE", "example1",
                       (Fraction(1), float("inf")), ("job1", "job2"))


@dataclass
class CertificateReport:
    loads_match: bool
    opt_is_one: bool
    equilibrium_kind_holds: bool
    ratio_matches: bool
    details: str
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.loads_match and self.opt_is_one and self.equilibrium_kind_holds and self.ratio_matches

    def to_json(self) -> str:
        payload = {
            "passed": self.passed,
            "loads_match": self.loads_match,
            "opt_is_one": self.opt_is_one,
            "equilibrium_kind_holds": self.equilibrium_kind_holds,
            "ratio_matches": self.ratio_matches,
            **{k: str(v) for k, v in self.values.items()},
        }
        return json.dumps(payload, sort_keys=True)


def verify(cert: Certificate, tol: float = 1e-9) -> CertificateReport:
    """Brute-force check of a certificate; exact whenever ``s`` is rational."""
    inst = cert.instance
    l1, l2 = machine_loads(inst, cert.equilibrium)
    loads_match = close(l1, cert.expected_l1, tol) and close(l2, cert.expected_l2, tol)
    opt, _ = optimum(inst)
    opt_is_one = close(opt, 1, tol)
    nash = is_nash(inst, cert.equilibrium)
    if cert.kind == "SE":
        kind_holds = nash and is_strong_nash(inst, cert.equilibrium)
    else:
        kind_holds = nash
    ratio = makespan(inst, cert.equilibrium) / opt
    ratio_matches = close(ratio, cert.expected_ratio, tol)
    lines = [
        f"certificate {cert.segment} ({cert.kind}) at s={inst.s}",
        f"  jobs: {', '.join(f'{lab}={j.size}@{j.favorite}' for lab, j in zip(cert.labels, inst.jobs))}",
        f"  loads (l1, l2) = ({l1}, {l2}); expected ({cert.expected_l1}, {cert.expected_l2})",
        f"  opt = {opt}",
        f"  {cert.kind} holds: {kind_holds}",
        f"  ratio = {ratio}; expected {cert.expected_ratio}",
    ]
    return CertificateReport(
        loads_match, opt_is_one, kind_holds, ratio_matches, "\n".join(lines),
        values={"s": inst.s, "l1": l1, "l2": l2, "opt": opt, "ratio": ratio,
                "expected_ratio": cert.expected_ratio},
    )
