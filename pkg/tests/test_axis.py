from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from axial.algebra import Element, left_operator
from axial.axis import (FrameError, build_frame, check_fusion, classify_axis, decompose, find_idempotents,
                        jordan_residual)
from axial.constructions import dim2_algebra, matsuo_algebra, one_line_space
from axial.errors import InputError
from axial.linalg import Matrix, Polynomial, eigenspace

from conftest import DIM2_LAMBDAS, HALF, dim2_lambdas, matsuo_etas, small_fractions


def Q(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def sympy_operators(table, a):
    """L_a and R_a straight from the structure constants."""
    n = table.dim
    L = sympy.zeros(n, n)
    R = sympy.zeros(n, n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                g = Q(table.gamma[i][j][k])
                L[k, j] += Q(a[i]) * g
                R[k, i] += Q(a[j]) * g
    return L, R


def sympy_decomposition(table, a, v, lam, dlt):
    """Project ``v`` onto the five joint eigenspaces using sympy nullspaces."""
    L, R = sympy_operators(table, a)
    n = table.dim
    eye = sympy.eye(n)
    pairs = [(1, 1), (0, 0), (lam, 0), (0, dlt), (lam, dlt)]
    blocks = [sympy.Matrix.vstack(L - Q(Fraction(mu)) * eye, R - Q(Fraction(nu)) * eye).nullspace()
              for mu, nu in pairs]
    cols = [vec for b in blocks for vec in b]
    coeffs = sympy.Matrix.hstack(*cols).solve(sympy.Matrix([Q(x) for x in v]))
    out, pos = [], 0
    for b in blocks:
        acc = sympy.zeros(n, 1)
        for vec in b:
            acc += coeffs[pos] * vec
            pos += 1
        out.append([sympy.Rational(x) for x in acc])
    return out


@pytest.mark.parametrize("lam", DIM2_LAMBDAS)
def test_dim2_type(lam):
    t = dim2_algebra(lam)
    for k in range(2):
        p = classify_axis(t, t.basis(k))
        assert p.is_axis and p.jordan_type
        assert p.type == (lam, 1 - lam)
        assert p.a11.dim == 1


@given(dim2_lambdas())
def test_dim2_type_any_lambda(lam):
    t = dim2_algebra(lam)
    p = classify_axis(t, t.basis(1))
    assert p.type == (lam, 1 - lam)


def test_dim2_decompose_b(dim2):
    a, b = dim2.basis(0), dim2.basis(1)
    d = decompose(classify_axis(dim2, a), b)
    assert d.alpha == 1
    assert d.comp_00.is_zero() and d.comp_L0.is_zero() and d.comp_0D.is_zero()
    assert d.comp_LD == b - a


def test_decompose_axis_itself(matsuo6):
    a = matsuo6.basis(3)
    d = decompose(classify_axis(matsuo6, a), a)
    assert d.alpha == 1
    assert all(c.is_zero() for c in (d.comp_00, d.comp_L0, d.comp_0D, d.comp_LD))


def test_matsuo_line_minpoly(matsuo3):
    p = classify_axis(matsuo3, matsuo3.basis(0))
    assert p.left_minpoly == Polynomial.from_roots([0, 1, Fraction(1, 4)])
    assert p.left_minpoly.factored() == "t(t - 1/4)(t - 1)"
    assert p.type == (Fraction(1, 4), Fraction(1, 4))
    assert p.jordan_type


@settings(max_examples=40)
@given(matsuo_etas())
def test_matsuo_minpoly_any_eta(eta):
    t = matsuo_algebra(one_line_space(), eta)
    L, _ = sympy_operators(t, t.basis(0))
    lam = sympy.Symbol("lam")
    expected = L.charpoly(lam)
    p = classify_axis(t, t.basis(0))
    # the three eigenvalues are distinct, so minimal = characteristic polynomial
    assert p.left_minpoly == Polynomial([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
                                         for c in reversed(expected.all_coeffs())])
    assert p.type == (eta / 2, eta / 2)


def test_matsuo_line_decomposition_oracle(matsuo3):
    a, b = matsuo3.basis(0), matsuo3.basis(1)
    p = classify_axis(matsuo3, a)
    d = decompose(p, b)
    want = sympy_decomposition(matsuo3, a, b, p.lam, p.dlt)
    got = [d.alpha * a, d.comp_00, d.comp_L0, d.comp_0D, d.comp_LD]
    for g, w in zip(got, want):
        assert [Q(x) for x in g.coeffs] == w
    assert d.alpha == Fraction(1, 8)
    assert d.comp_00 == Element.of([Fraction(-1, 8), HALF, HALF])
    assert d.comp_LD == Element.of([0, HALF, -HALF])


def test_s4_decomposition_oracle(matsuo6):
    a = matsuo6.basis(0)
    p = classify_axis(matsuo6, a)
    for k in range(1, 6):
        v = matsuo6.basis(k)
        d = decompose(p, v)
        want = sympy_decomposition(matsuo6, a, v, p.lam, p.dlt)
        got = [d.alpha * a, d.comp_00, d.comp_L0, d.comp_0D, d.comp_LD]
        assert [[Q(x) for x in g.coeffs] for g in got] == want


@given(st.lists(small_fractions(), min_size=3, max_size=3))
def test_decompose_reconstructs_and_lands_in_eigenspaces(coeffs):
    t = matsuo_algebra(one_line_space(), HALF)
    a = t.basis(2)
    p = classify_axis(t, a)
    v = Element.of(coeffs)
    d = decompose(p, v)
    assert d.reconstruct(a) == v
    for comp, (mu, nu) in ((d.comp_00, (0, 0)), (d.comp_LD, (p.lam, p.dlt))):
        assert t.mul(a, comp) == mu * comp
        assert t.mul(comp, a) == nu * comp


def test_e11_is_not_primitive(mat2):
    p = classify_axis(mat2, mat2.basis(0))
    assert not p.is_axis
    assert not p.primitive_left
    assert p.a11.dim <= 1
    assert eigenspace(left_operator(mat2, mat2.basis(0)), 1).dim == 2
    assert "1-eigenspace" in p.reason


def test_non_idempotent_rejected(mat2):
    with pytest.raises(InputError, match="idempotent"):
        classify_axis(mat2, mat2.basis(1))


def test_wrong_dimension_rejected(dim2):
    with pytest.raises(InputError):
        classify_axis(dim2, Element.of([1, 0, 0]))


def test_identity_of_matrix_algebra_is_not_an_axis(mat2):
    one = mat2.basis(0) + mat2.basis(3)
    p = classify_axis(mat2, one)
    assert not p.is_axis  # 1-eigenspace is everything


@st.composite
def basis_changes(draw, n):
    rows = draw(st.lists(st.lists(small_fractions(3), min_size=n, max_size=n), min_size=n, max_size=n))
    m = Matrix.from_rows(rows)
    assume(m.is_invertible())
    return m


@settings(max_examples=25)
@given(st.data())
def test_classification_is_basis_independent(data):
    t = matsuo_algebra(one_line_space(), data.draw(matsuo_etas()))
    change = data.draw(basis_changes(3))
    moved = t.transported(change)
    a = t.basis(1)
    a_moved = Element(change.inverse().apply(a.coeffs))
    p, q = classify_axis(t, a), classify_axis(moved, a_moved)
    assert q.is_axis == p.is_axis and q.jordan_type == p.jordan_type
    assert q.type == p.type
    assert q.left_minpoly == p.left_minpoly and q.right_minpoly == p.right_minpoly
    assert [s.dim for s in q.spaces.values()] == [s.dim for s in p.spaces.values()]


def test_fusion_on_corpus_axes(dim2, matsuo3, matsuo6):
    for t in (dim2, matsuo3, matsuo6):
        for k in range(t.dim):
            r = check_fusion(t, classify_axis(t, t.basis(k)))
            assert r.passed and len(r) > 0


def test_fusion_needs_axis(mat2):
    with pytest.raises(InputError):
        check_fusion(mat2, classify_axis(mat2, mat2.basis(0)))


def test_jordan_residual_zero(matsuo6):
    assert jordan_residual(classify_axis(matsuo6, matsuo6.basis(4))) == 0


def test_frame_dim2(dim2):
    f = build_frame(dim2, dim2.basis(0), dim2.basis(1))
    assert f.alpha_b == f.beta_a == 1
    assert f.x.is_zero() and f.y.is_zero() and f.c.is_zero()
    assert f.z == dim2.basis(1) - dim2.basis(0)
    assert f.z_prime == dim2.basis(0) - dim2.basis(1)
    assert f.closure.dim == 2


def test_frame_swap_matches_rebuild(matsuo3):
    a, b = matsuo3.basis(0), matsuo3.basis(2)
    assert build_frame(matsuo3, a, b).swapped() == build_frame(matsuo3, b, a)


def test_frame_rejects_equal_generators(matsuo3):
    with pytest.raises(FrameError):
        build_frame(matsuo3, matsuo3.basis(0), matsuo3.basis(0))


def test_frame_rejects_non_axis(mat2):
    with pytest.raises(FrameError):
        build_frame(mat2, mat2.basis(0), mat2.basis(3))


def test_find_idempotents_dim2():
    t = dim2_algebra(Fraction(1, 3))
    found = {e.coeffs for e in find_idempotents(t)}
    assert t.basis(0).coeffs in found and t.basis(1).coeffs in found
    for coeffs in found:
        e = Element(coeffs)
        assert t.mul(e, e) == e


def test_find_idempotents_cap(matsuo6):
    with pytest.raises(InputError):
        find_idempotents(matsuo6, values=range(10), max_candidates=100)
