"""Necessary equilibrium conditions as linear inequalities over the eight
group loads ``(a1, a2, b1, b2, c1, c2, d1, d2)``.

Every condition reads ``coeffs . d <= rhs``. The optimum is normalised to 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._numeric import Scalar, as_scalar, le
from .model import GROUP_NAMES, GroupDecomposition, loads_from_decomposition

_IDX = {name: i for i, name in enumerate(GROUP_NAMES)}

#: groups whose single-job deviation constraints are branched on
SIGN_GROUPS = ("a1", "a2", "c1", "c2")

#: the five coalition swaps; each is a disjunction of two conditions
SWAP_NAMES = ("a2-b2", "a2-d1", "a2-b1d2", "a2c2-all", "all-all")


@dataclass(frozen=True)
class LinearCondition:
    label: str
    coeffs: tuple
    rhs: Scalar

    def lhs(self, d: GroupDecomposition) -> Scalar:
        return sum(c * v for c, v in zip(self.coeffs, d.as_tuple()))

    def holds(self, d: GroupDecomposition) -> bool:
        return le(self.lhs(d), self.rhs)


def _vec(s, **terms) -> tuple:
    zero = s - s
    out = [zero] * 8
    for name, coef in terms.items():
        out[_IDX[name]] = out[_IDX[name]] + coef
    return tuple(out)


def _add(*vecs) -> tuple:
    return tuple(sum(col) for col in zip(*vecs))


def _neg(v) -> tuple:
    return tuple(-c for c in v)


def _l1(s):
    return _vec(s, a1=1, a2=1, c1=1, c2=1)


def _l2(s):
    return _vec(s, b1=1, b2=1, d1=1, d2=1)


def base_conditions(s, strong: bool) -> list[LinearCondition]:
    """Optimal-load bounds, the ``l2 <= l1`` normalisation and (for strong
    equilibria) the bound on the lighter machine."""
    s = as_scalar(s)
    one, zero = s / s, s - s
    l1, l2 = _l1(s), _l2(s)
    out = [
        LinearCondition("opt_load_1", _vec(s, a1=1, b2=1 / s, c2=1, d1=s), one),
        LinearCondition("opt_load_2", _vec(s, a2=1 / s, b1=1, c1=s, d2=1), one),
        LinearCondition("l2_le_l1", _add(l2, _neg(l1)), zero),
    ]
    if strong:
        out.append(LinearCondition("min_load", l2, one))
    return out


def stay_condition(s, group: str) -> LinearCondition:
    """No single job of ``group`` (on machine 1) gains by moving to machine 2."""
    s = as_scalar(s)
    factor = 1 / s if group.startswith("a") else s
    row = _add(_l1(s), _neg(_l2(s)), _neg(_vec(s, **{group: factor})))
    return LinearCondition(f"stay_{group}", row, s - s)


def swap_conditions(s, swap: str) -> tuple[LinearCondition, LinearCondition]:
    """The two alternatives of a coalition swap: the first says the machine-1
    movers do not gain, the second that the machine-2 movers do not."""
    s = as_scalar(s)
    zero = s - s
    l1, l2 = _l1(s), _l2(s)
    diff, rdiff = _add(l1, _neg(l2)), _add(l2, _neg(l1))
    if swap == "a2-b2":
        first = _add(diff, _vec(s, b2=1, a2=-1 / s))
        second = _add(rdiff, _vec(s, a2=1, b2=-1 / s))
    elif swap == "a2-d1":
        first = _add(diff, _vec(s, d1=1, a2=-1 / s))
        second = _add(rdiff, _vec(s, a2=1, d1=-s))
    elif swap == "a2-b1d2":
        first = _add(diff, _vec(s, b1=1, d2=1, a2=-1 / s))
        second = _add(rdiff, _vec(s, a2=1, b1=-1 / s, d2=-s))
    elif swap == "a2c2-all":
        first = _add(l1, _vec(s, a2=-1 / s, c2=-s))
        second = _add(l2, _vec(s, a1=-1, c1=-1, b1=-1 / s, b2=-1 / s, d1=-s, d2=-s))
    elif swap == "all-all":
        first = _add(l1, _vec(s, a1=-1 / s, a2=-1 / s, c1=-s, c2=-s))
        second = _add(l2, _vec(s, b1=-1 / s, b2=-1 / s, d1=-s, d2=-s))
    else:
        raise ValueError(f"unknown swap {swap!r}")
    return (LinearCondition(f"swap_{swap}[first]", first, zero),
            LinearCondition(f"swap_{swap}[second]", second, zero))


@dataclass(frozen=True)
class ConditionFlags:
    opt_load_1: bool
    opt_load_2: bool
    min_load: bool
    stay: dict
    swaps: dict

    @property
    def all_hold(self) -> bool:
        return (self.opt_load_1 and self.opt_load_2 and self.min_load
                and all(self.stay.values())
                and all(a or b for a, b in self.swaps.values()))


def se_condition_flags(d: GroupDecomposition, s) -> ConditionFlags:
    """Evaluate every strong-equilibrium condition on a decomposition.

    Single-job conditions only apply to nonempty groups and count as holding
    otherwise. Each swap maps to the truth values of its two alternatives.
    """
    s = as_scalar(s)
    _, l2, l1_ref, l2_ref = loads_from_decomposition(d, s)
    stay = {g: getattr(d, g) == 0 or stay_condition(s, g).holds(d) for g in SIGN_GROUPS}
    swaps = {}
    for name in SWAP_NAMES:
        first, second = swap_conditions(s, name)
        swaps[name] = (first.holds(d), second.holds(d))
    return ConditionFlags(
        opt_load_1=le(l1_ref, 1),
        opt_load_2=le(l2_ref, 1),
        min_load=le(l2, 1),
        stay=stay,
        swaps=swaps,
    )
