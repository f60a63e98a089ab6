"""Slow, literal reference implementations used only by the tests.

None of these share code paths with the library beyond the data types.
"""

import itertools
from fractions import Fraction

import numpy as np

from favgame.model import M1, M2, Machine


def loads(inst, x):
    l = {M1: Fraction(0) if inst.exact else 0.0, M2: Fraction(0) if inst.exact else 0.0}
    for job, m in zip(inst.jobs, x):
        t = job.size if job.favorite == m else inst.s * job.size
        l[m] += t
    return l[M1], l[M2]


def brute_optimum(inst):
    best = None
    for x in itertools.product((M1, M2), repeat=len(inst.jobs)):
        span = max(loads(inst, x))
        if best is None or span < best[0]:
            best = (span, x)
    return best


def cost_of(inst, x, j):
    return loads(inst, x)[0 if x[j] == M1 else 1]


def flip(x, members):
    return tuple(Machine(m).other if i in members else m for i, m in enumerate(x))


def all_improve(inst, x, members):
    y = flip(x, set(members))
    return all(cost_of(inst, y, j) < cost_of(inst, x, j) for j in members)


def brute_coalition(inst, x):
    n = len(inst.jobs)
    for size in range(1, n + 1):
        for members in itertools.combinations(range(n), size):
            if all_improve(inst, x, members):
                return members
    return None


def brute_nash(inst, x):
    return all(not all_improve(inst, x, (j,)) for j in range(len(inst.jobs)))


def vertex_max(c, A_ub, b_ub, A_eq=None, b_eq=None):
    """Maximise ``c.x`` over ``A_ub x <= b_ub, A_eq x = b_eq, x >= 0`` by
    enumerating every basic solution. Returns ``None`` when infeasible. The
    feasible set must be bounded."""
    c = np.asarray(c, dtype=float)
    n = len(c)
    A_ub = np.asarray(A_ub, dtype=float).reshape(-1, n)
    b_ub = np.asarray(b_ub, dtype=float)
    A_eq = np.zeros((0, n)) if A_eq is None else np.asarray(A_eq, dtype=float).reshape(-1, n)
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=float)
    # Candidate active sets: all equalities plus n - m_eq of the inequality
    # rows and the nonnegativity bounds.
    ineq = np.vstack([A_ub, -np.eye(n)])
    ineq_rhs = np.concatenate([b_ub, np.zeros(n)])
    k = n - len(A_eq)
    if k < 0:
        raise ValueError("more equalities than variables")
    combos = np.array(list(itertools.combinations(range(len(ineq)), k)), dtype=int).reshape(-1, k)
    mats = np.concatenate([np.broadcast_to(A_eq, (len(combos),) + A_eq.shape), ineq[combos]], axis=1)
    rhs = np.concatenate([np.broadcast_to(b_eq, (len(combos), len(b_eq))), ineq_rhs[combos]], axis=1)
    dets = np.linalg.det(mats)
    keep = np.abs(dets) > 1e-9
    if not keep.any():
        return None
    pts = np.linalg.solve(mats[keep], rhs[keep][..., None])[..., 0]
    tol = 1e-9
    ok = (pts >= -tol).all(axis=1)
    ok &= (pts @ A_ub.T <= b_ub + tol).all(axis=1)
    if len(A_eq):
        ok &= (np.abs(pts @ A_eq.T - b_eq) <= tol).all(axis=1)
    if not ok.any():
        return None
    return float((pts[ok] @ c).max())


def random_bounded_lp(rng, max_vars=8, max_rows=12):
    """Integer data for ``max c.x s.t. A x <= b, x >= 0`` plus a budget row
    ``sum(x) <= B`` so the feasible set is bounded. Some right-hand sides are
    negative, so infeasible draws occur."""
    n = int(rng.integers(1, max_vars + 1))
    m = int(rng.integers(0, max_rows + 1))
    c = rng.integers(-5, 6, size=n)
    A = rng.integers(-5, 6, size=(m, n))
    b = rng.integers(-3, 11, size=m)
    A = np.vstack([A, np.ones((1, n), dtype=int)])
    b = np.append(b, int(rng.integers(1, 11)))
    return c, A, b
