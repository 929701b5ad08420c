from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from axial.constructions import dim2_algebra, matrix_unit_algebra, matsuo_algebra, one_line_space, transposition_space

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DIM2_LAMBDAS = [Fraction(1, 3), Fraction(-2), Fraction(3, 5)]
HALF = Fraction(1, 2)


def small_fractions(bound: int = 9, nonzero: bool = False):
    q = st.integers(1, bound)
    p = st.integers(1 if nonzero else -bound, bound)
    frac = st.builds(Fraction, p, q)
    if nonzero:
        return st.builds(lambda f, s: f * s, frac, st.sampled_from([1, -1]))
    return frac


def dim2_lambdas():
    return small_fractions().filter(lambda f: f not in (0, 1, HALF))


def matsuo_etas():
    return small_fractions().filter(lambda f: f not in (0, 2))


@pytest.fixture(params=DIM2_LAMBDAS, ids=lambda q: f"lam={q}")
def dim2(request):
    return dim2_algebra(request.param)


@pytest.fixture(scope="session")
def matsuo3():
    return matsuo_algebra(one_line_space(), HALF)


@pytest.fixture(scope="session")
def matsuo6():
    return matsuo_algebra(transposition_space(4), HALF)


@pytest.fixture(scope="session")
def mat2():
    return matrix_unit_algebra(2)
