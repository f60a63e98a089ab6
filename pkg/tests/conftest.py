from fractions import Fraction

import pytest
from hypothesis import strategies as st

from favgame import Instance, Job
from favgame.model import M1, M2

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


sizes = st.fractions(min_value=Fraction(1, 20), max_value=5, max_denominator=20)
slowdowns = st.fractions(min_value=1, max_value=4, max_denominator=12)


@st.composite
def instances(draw, min_jobs=0, max_jobs=6, s=slowdowns):
    n = draw(st.integers(min_jobs, max_jobs))
    jobs = tuple(Job(draw(sizes), draw(st.sampled_from((1, 2)))) for _ in range(n))
    return Instance(draw(s), jobs)


@st.composite
def instance_and_allocation(draw, **kw):
    inst = draw(instances(**kw))
    x = tuple(draw(st.sampled_from((M1, M2))) for _ in inst.jobs)
    return inst, x


@pytest.fixture
def example1():
    return Instance.from_pairs(3, [(1, 1), (1, 2)])
