from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from axial.errors import InputError
from axial.linalg import (Matrix, Polynomial, Subspace, eigenspace, format_rational, minimal_polynomial,
                          nullspace, parse_rational, rref, solve_combination)

from conftest import small_fractions


def matrices(max_n=4, square=False):
    def build(shape):
        r, c = shape
        return st.lists(st.lists(small_fractions(), min_size=c, max_size=c), min_size=r, max_size=r).map(
            Matrix.from_rows)

    dims = st.integers(1, max_n)
    shapes = dims.map(lambda n: (n, n)) if square else st.tuples(dims, dims)
    return shapes.flatmap(build)


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)), ("-3", Fraction(-3)), ("1/3", Fraction(1, 3)), ("-2/4", Fraction(-1, 2)),
    ("0", Fraction(0)), (" 5/7 ", Fraction(5, 7)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "0.5", "1e3", "a", "1/-2", "--1", "1//2", "+", "1/"])
def test_parse_rational_rejects(text):
    with pytest.raises(InputError):
        parse_rational(text)


@given(small_fractions(50))
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(matrices())
def test_rref_matches_sympy(m):
    red, pivots = rref(m.rows, m.ncols)
    exp, exp_piv = to_sympy(m).rref()
    assert list(pivots) == list(exp_piv)
    for i, row in enumerate(red):
        assert [sympy.Rational(x.numerator, x.denominator) for x in row] == list(exp.row(i))


@given(matrices())
def test_nullspace_is_kernel(m):
    ker = nullspace(m)
    assert ker.dim == m.ncols - m.rank()
    for v in ker.basis_rows:
        assert not any(m.apply(v))


@given(matrices(square=True))
def test_inverse(m):
    assume(m.is_invertible())
    n = m.nrows
    assert m @ m.inverse() == Matrix.identity(n)
    assert m.inverse() @ m == Matrix.identity(n)


def test_singular_inverse_raises():
    with pytest.raises(InputError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


@given(st.data())
def test_product_matches_sympy(data):
    r, k, c = (data.draw(st.integers(1, 4)) for _ in range(3))
    a = Matrix.from_rows(data.draw(st.lists(st.lists(small_fractions(), min_size=k, max_size=k), min_size=r, max_size=r)))
    b = Matrix.from_rows(data.draw(st.lists(st.lists(small_fractions(), min_size=c, max_size=c), min_size=k, max_size=k)))
    assert to_sympy(a @ b) == to_sympy(a) * to_sympy(b)


def brute_minpoly(m: Matrix) -> Polynomial:
    """Smallest k with I, M, ..., M^k dependent, found on flattened powers."""
    n = m.nrows
    powers = [Matrix.identity(n)]
    while True:
        nxt = powers[-1] @ m
        flat = [tuple(x for r in p.rows for x in r) for p in powers]
        sol = solve_combination(flat, tuple(x for r in nxt.rows for x in r))
        if sol is not None:
            return Polynomial(tuple(-c for c in sol) + (Fraction(1),))
        powers.append(nxt)


@given(matrices(max_n=4, square=True))
def test_minimal_polynomial_oracle(m):
    p = minimal_polynomial(m)
    assert p == brute_minpoly(m)
    assert p.at_matrix(m) == Matrix.zero(m.nrows)


def test_minimal_polynomial_diagonal():
    m = Matrix.diagonal([0, 1, Fraction(1, 4), 1])
    assert minimal_polynomial(m) == Polynomial.from_roots([0, 1, Fraction(1, 4)])
    assert minimal_polynomial(m).factored() == "t(t - 1/4)(t - 1)"


def test_minimal_polynomial_jordan_block():
    m = Matrix.from_rows([[2, 1], [0, 2]])
    assert minimal_polynomial(m) == Polynomial.from_roots([2, 2])


polys = st.lists(small_fractions(), min_size=1, max_size=5).map(Polynomial)


@given(polys, polys)
def test_polynomial_division(a, b):
    assume(not b.is_zero)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@given(polys, polys)
def test_gcd_divides_both(a, b):
    assume(not a.is_zero and not b.is_zero)
    g = a.gcd(b)
    assert g.divides(a) and g.divides(b)
    assert a.divides(a.lcm(b)) and b.divides(a.lcm(b))


@settings(max_examples=60)
@given(st.lists(small_fractions(), min_size=0, max_size=4), polys)
def test_rational_roots_against_sympy(roots, cofactor):
    p = Polynomial.from_roots(roots) * cofactor
    assume(not p.is_zero)
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(p.coeffs))
    expected = sorted(set(sympy.roots(sympy.Poly(expr, t), filter="Q")))
    got = [sympy.Rational(r.numerator, r.denominator) for r in p.rational_roots()]
    assert sorted(got) == expected
    for r in roots:
        assert p(r) == 0


@given(matrices(max_n=4, square=True), small_fractions())
def test_eigenspace_vectors(m, mu):
    for v in eigenspace(m, mu).basis_rows:
        assert m.apply(v) == tuple(mu * x for x in v)


def spans(n):
    vec = st.lists(small_fractions(), min_size=n, max_size=n)
    return st.lists(vec, max_size=n).map(lambda vs: Subspace.span(vs, n))


@given(st.data())
def test_dimension_formula(data):
    n = data.draw(st.integers(1, 4))
    u, w = data.draw(spans(n)), data.draw(spans(n))
    assert (u + w).dim + u.intersect(w).dim == u.dim + w.dim
    assert u.intersect(w).issubspace(u) and u.issubspace(u + w)


@given(st.data())
def test_coordinates_reconstruct(data):
    n = data.draw(st.integers(1, 4))
    u = data.draw(spans(n))
    coeffs = data.draw(st.lists(small_fractions(), min_size=u.dim, max_size=u.dim))
    v = tuple(sum((c * row[i] for c, row in zip(coeffs, u.basis_rows)), Fraction(0)) for i in range(n))
    assert u.contains(v)
    assert u.coordinates(v) == tuple(coeffs)


def test_subspace_rejects_wrong_length():
    with pytest.raises(InputError):
        Subspace.span([(1, 2)], 3)
