from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from favgame import (
    GroupDecomposition,
    Instance,
    Job,
    decompose,
    enumerate_allocations,
    loads_from_decomposition,
    machine_loads,
    makespan,
    optimum,
    processing_time,
)
from favgame.certificates import poa_certificate, spoa_certificate
from favgame.model import (
    M1,
    M2,
    CapExceeded,
    Machine,
    all_machine_loads,
    allocation_from_index,
    processing_table,
)

from conftest import instance_and_allocation, instances
from oracles import brute_optimum, loads as literal_loads


def test_machine_other():
    assert M1.other is M2 and M2.other is M1
    assert list(Machine) == [M1, M2]


@pytest.mark.parametrize("machine, s, expected", [(M1, 3, 2), (M2, 3, 6), (M2, 1, 2)])
def test_processing_time(machine, s, expected):
    assert processing_time(Job(2, M1), machine, F(s)) == expected


def test_job_rejects_nonpositive_size():
    with pytest.raises(ValueError):
        Job(0, M1)
    with pytest.raises(ValueError):
        Job(F(-1, 2), M2)


def test_instance_rejects_small_s():
    with pytest.raises(ValueError):
        Instance(F(9, 10), ())


def test_loads_example1(example1):
    assert machine_loads(example1, (M2, M1)) == (3, 3)
    assert machine_loads(example1, (M1, M2)) == (1, 1)
    assert machine_loads(Instance(2, ()), ()) == (0, 0)


def test_makespan():
    inst = Instance.from_pairs(3, [(1, 1), (1, 2)])
    assert makespan(inst, (M2, M1)) == 3
    assert makespan(inst, (M1, M2)) == 1
    assert makespan(Instance.from_pairs(2, [(F(7, 3), 2)]), (M2,)) == F(7, 3)


def test_length_mismatch(example1):
    with pytest.raises(ValueError):
        machine_loads(example1, (M1,))


def test_enumerate_allocations():
    assert list(enumerate_allocations(0)) == [()]
    assert len(list(enumerate_allocations(2))) == 4
    three = list(enumerate_allocations(3))
    assert len(three) == 8 and three == sorted(three)
    assert len(set(three)) == 8
    assert [allocation_from_index(i, 3) for i in range(8)] == three


def test_enumerate_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        enumerate_allocations(21)
    monkeypatch.setenv("FAVGAME_JOB_CAP", "3")
    with pytest.raises(CapExceeded):
        enumerate_allocations(4)
    with pytest.raises(CapExceeded):
        optimum(Instance.from_pairs(2, [(1, 1)] * 4))


def test_optimum_examples(example1):
    assert optimum(example1) == (1, (M1, M2))
    assert optimum(Instance.from_pairs(5, [(F(3, 4), 2)])) == (F(3, 4), (M2,))
    lb3 = spoa_certificate(3, F(17, 10)).instance
    assert len(lb3.jobs) == 4
    assert brute_optimum(lb3)[0] == 1
    assert optimum(lb3)[0] == 1


def test_optimum_tie_break_is_lexicographic():
    # identical machines, two equal jobs: (M1, M2) and (M2, M1) tie
    inst = Instance.from_pairs(1, [(1, 1), (1, 1)])
    assert optimum(inst) == (1, (M1, M2))


def test_optimum_float_mode():
    inst = Instance.from_pairs(1.5, [(1, 1), (0.5, 2), (0.25, 1)])
    value, x = optimum(inst)
    assert isinstance(value, float)
    assert value == pytest.approx(brute_optimum(inst)[0])


@settings(max_examples=150, deadline=None)
@given(instances(max_jobs=7))
def test_optimum_matches_brute_force(inst):
    value, x = optimum(inst)
    expected, first = brute_optimum(inst)
    assert value == expected
    assert x == first
    assert makespan(inst, x) == value


@settings(max_examples=100, deadline=None)
@given(instances(max_jobs=7))
def test_vectorised_loads_match_scalar(inst):
    l1, l2 = all_machine_loads(processing_table(inst))
    table = processing_table(inst)
    for i, x in enumerate(enumerate_allocations(len(inst.jobs))):
        assert (table.to_scalar(l1[i]), table.to_scalar(l2[i])) == machine_loads(inst, x)


@settings(max_examples=100, deadline=None)
@given(instances(max_jobs=6))
def test_optimum_is_lower_bound(inst):
    opt, _ = optimum(inst)
    assert all(opt <= makespan(inst, x) for x in enumerate_allocations(len(inst.jobs)))


@settings(max_examples=100, deadline=None)
@given(instance_and_allocation())
def test_relabel_invariance(pair):
    inst, x = pair
    flipped = tuple(m.other for m in x)
    assert makespan(inst.relabeled(), flipped) == makespan(inst, x)
    l1, l2 = machine_loads(inst, x)
    assert machine_loads(inst.relabeled(), flipped) == (l2, l1)


@given(instances(s=st.just(F(1))))
def test_identical_machines(inst):
    for job in inst.jobs:
        assert processing_time(job, M1, inst.s) == processing_time(job, M2, inst.s)


def test_decompose_example1(example1):
    d = decompose(example1, (M2, M1), (M1, M2))
    assert d == GroupDecomposition(a2=3, b2=3)


def test_decompose_lb2():
    cert = spoa_certificate(2, F(3, 2))
    d = decompose(cert.instance, cert.equilibrium, cert.reference_opt)
    assert d == GroupDecomposition(a2=F(15, 16), b2=F(9, 16), c2=F(5, 8), d2=F(3, 8))
    assert loads_from_decomposition(d, F(3, 2)) == (F(25, 16), F(15, 16), 1, 1)


def test_loads_from_decomposition_poa_certificate():
    d = GroupDecomposition(a2=F(12, 7), b1=F(1, 7), b2=F(8, 7), c2=F(3, 7))
    assert loads_from_decomposition(d, 2) == (F(15, 7), F(9, 7), 1, 1)
    cert = poa_certificate(2)
    assert decompose(cert.instance, cert.equilibrium, cert.reference_opt) == d
    assert loads_from_decomposition(GroupDecomposition(), 3) == (0, 0, 0, 0)


def test_negative_group_rejected():
    with pytest.raises(ValueError):
        GroupDecomposition(a1=F(-1))


@settings(max_examples=200, deadline=None)
@given(instance_and_allocation(), instance_and_allocation())
def test_decomposition_round_trip(pair, other):
    inst, x = pair
    # second allocation of the same length, taken from an independent draw
    y = tuple((list(other[1]) + [M1] * len(x))[: len(x)])
    d = decompose(inst, x, y)
    if len(inst.jobs) == 0:
        assert d == GroupDecomposition()
    assert decompose(inst, x, x).a2 == decompose(inst, x, x).c1 == 0
    assert decompose(inst, x, x).b2 == decompose(inst, x, x).d1 == 0
    l1, l2, r1, r2 = loads_from_decomposition(d, inst.s)
    assert (l1, l2) == literal_loads(inst, x)
    assert (r1, r2) == literal_loads(inst, y)
