import random
import subprocess
import sys

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from axial import _pykernels, kernels

BACKENDS = [pytest.param(_pykernels, id="python")]
try:
    from axial import _ckernels

    BACKENDS.append(pytest.param(_ckernels, id="cython"))
except ImportError:  # extension not built; the fallback still gets tested
    pass

BIG = 2**62


def int_matrices(max_rows=6, max_cols=6, bound=20):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def sympy_rref(rows):
    red, pivots = sympy.Matrix(rows).rref()
    return [[sympy.Rational(x) for x in red.row(i)] for i in range(len(pivots))], list(pivots)


@pytest.mark.parametrize("impl", BACKENDS)
@given(rows=int_matrices())
def test_gauss_jordan_matches_sympy(impl, rows):
    ncols = len(rows[0])
    mat, pivots, d = impl.gauss_jordan(rows, ncols)
    expected, exp_pivots = sympy_rref(rows)
    assert pivots == exp_pivots
    assert d > 0
    for got, want in zip(mat, expected):
        assert [sympy.Rational(v, d) for v in got] == want
    for row in mat[len(pivots):]:
        assert not any(row)


@pytest.mark.parametrize("impl", BACKENDS)
def test_gauss_jordan_pivots_all_equal_d(impl):
    rows = [[2, 4, 1], [3, 1, 5], [7, 0, 2]]
    mat, pivots, d = impl.gauss_jordan(rows, 3)
    assert pivots == [0, 1, 2]
    assert [mat[i][p] for i, p in enumerate(pivots)] == [d, d, d]


@pytest.mark.parametrize("impl", BACKENDS)
def test_gauss_jordan_does_not_mutate_input(impl):
    rows = [[1, 2], [3, 4]]
    impl.gauss_jordan(rows, 2)
    assert rows == [[1, 2], [3, 4]]


@pytest.mark.parametrize("impl", BACKENDS)
def test_gauss_jordan_survives_64bit_overflow(impl):
    rng = random.Random(5)
    rows = [[rng.randint(-BIG, BIG) for _ in range(4)] for _ in range(4)]
    assert impl.gauss_jordan(rows, 4) == _pykernels.gauss_jordan(rows, 4)
    mat, pivots, d = impl.gauss_jordan(rows, 4)
    assert d == abs(sympy.Matrix(rows).det())


def brute_contract(nz, n, u, v):
    out = [0] * n
    for i in range(n):
        for j in range(n):
            ks, gs = nz[i * n + j]
            for k, g in zip(ks, gs):
                out[k] += u[i] * v[j] * g
    return out


@st.composite
def contraction_case(draw, bound=10**6):
    n = draw(st.integers(1, 5))
    ints = st.integers(-bound, bound)
    nz = []
    for _ in range(n * n):
        ks = tuple(sorted(draw(st.sets(st.integers(0, n - 1)))))
        nz.append((ks, tuple(draw(ints) for _ in ks)))
    u = draw(st.lists(ints, min_size=n, max_size=n))
    v = draw(st.lists(ints, min_size=n, max_size=n))
    return nz, n, u, v


@pytest.mark.parametrize("impl", BACKENDS)
@given(case=contraction_case())
def test_contract_matches_brute_force(impl, case):
    assert impl.contract(*case) == brute_contract(*case)


@pytest.mark.parametrize("impl", BACKENDS)
@given(case=contraction_case(bound=BIG))
def test_contract_with_huge_entries(impl, case):
    assert impl.contract(*case) == brute_contract(*case)


@pytest.mark.parametrize("impl", BACKENDS)
@given(data=st.data())
def test_matmul_matches_sympy(impl, data):
    r, k, c = (data.draw(st.integers(1, 5)) for _ in range(3))
    bound = data.draw(st.sampled_from([10, BIG]))
    ints = st.integers(-bound, bound)
    a = data.draw(st.lists(st.lists(ints, min_size=k, max_size=k), min_size=r, max_size=r))
    b = data.draw(st.lists(st.lists(ints, min_size=c, max_size=c), min_size=k, max_size=k))
    expected = sympy.Matrix(a) * sympy.Matrix(b)
    assert impl.matmul(a, b, k, c) == expected.tolist()


def test_backend_switch_by_environment():
    code = "from axial import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"AXIAL_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
