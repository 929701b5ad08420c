"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`. Row reduction goes through
the fraction-free integer kernel in :mod:`axial.kernels`; rows are scaled to
integers first, which leaves the row space unchanged.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from axial import kernels
from axial.errors import InputError

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading minus) into a Fraction."""
    if not isinstance(text, str):
        raise InputError(f"rational must be a string like '3/4', got {text!r}")
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise InputError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_vector(values: Iterable) -> tuple:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> tuple:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        d = x.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return [x.numerator * (den // x.denominator) for x in row]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[tuple[tuple, ...], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    if not rows:
        return (), []
    mat, pivots, d = kernels.gauss_jordan([integer_row(r) for r in rows], ncols)
    out = tuple(tuple(Fraction(x, d) for x in mat[i]) for i in range(len(pivots)))
    return out, pivots


@dataclass(frozen=True)
class Matrix:
    """Square or rectangular rational matrix, stored by rows."""

    rows: tuple

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(tuple(as_vector(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            raise InputError("need at least one column")
        return cls(tuple(tuple(Fraction(c[i]) for c in cols) for i in range(len(cols[0]))))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "Matrix":
        return cls(tuple(zero_vector(n if m is None else m) for _ in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "Matrix":
        n = len(diag)
        return cls(tuple(tuple(Fraction(diag[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows))) if self.rows else self

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise InputError(f"vector of length {len(v)} does not fit a {self.nrows}x{self.ncols} matrix")
        col = [(Fraction(x),) for x in v]
        return tuple(r[0] for r in _product(self.rows, col, self.ncols, 1))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise InputError("matrix shapes do not compose")
            return Matrix(_product(self.rows, other.rows, self.ncols, other.ncols))
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(tuple(c * x for x in r) for r in self.rows))

    def shift(self, mu) -> "Matrix":
        """Return ``self - mu*I``."""
        mu = Fraction(mu)
        return Matrix(tuple(tuple(x - mu if i == j else x for j, x in enumerate(r)) for i, r in enumerate(self.rows)))

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        n = self.nrows
        if not self.is_square:
            raise InputError("only square matrices are invertible")
        aug = [r + unit_vector(n, i) for i, r in enumerate(self.rows)]
        red, pivots = rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) != n:
            raise InputError("matrix is singular")
        return Matrix(tuple(r[n:] for r in red))


def _scaled(rows) -> tuple[list[list[int]], int]:
    """Integer rows and a common denominator ``d`` with ``rows == out / d``."""
    d = 1
    for r in rows:
        for x in r:
            q = x.denominator
            if q != 1 and d % q:
                d = d * q // math.gcd(d, q)
    return [[x.numerator * (d // x.denominator) for x in r] for r in rows], d


def _product(a, b, inner: int, ncols: int) -> tuple:
    ai, da = _scaled(a)
    bi, db = _scaled(b)
    d = da * db
    out = kernels.matmul(ai, bi, inner, ncols)
    if d == 1:
        return tuple(tuple(Fraction(x) for x in r) for r in out)
    return tuple(tuple(Fraction(x, d) for x in r) for r in out)


def nullspace(m: Matrix) -> "Subspace":
    """Exact null space ``{v : m v = 0}``."""
    n = m.ncols
    red, pivots = rref(m.rows, n)
    free = [j for j in range(n) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        vecs.append(v)
    return Subspace.span(vecs, n)


def eigenspace(m: Matrix, mu) -> "Subspace":
    """Exact eigenspace of ``m`` for the rational ``mu`` (possibly zero)."""
    if not m.is_square:
        raise InputError("eigenspace needs a square matrix")
    return nullspace(m.shift(mu))


def solve_combination(vectors: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients ``c`` with ``sum c_i vectors_i == target``, or None.

    ``vectors`` must be linearly independent.
    """
    k = len(vectors)
    if k == 0:
        return () if is_zero(target) else None
    n = len(target)
    rows = [tuple(v[i] for v in vectors) + (target[i],) for i in range(n)]
    red, pivots = rref(rows, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coeffs[p] = row[k]
    return tuple(coeffs)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``Q^n`` held as an RREF basis."""

    n: int
    basis_rows: tuple
    pivots: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int) -> "Subspace":
        rows = [as_vector(v) for v in vectors]
        for r in rows:
            if len(r) != n:
                raise InputError(f"vector of length {len(r)} in a space of dimension {n}")
        red, pivots = rref(rows, n)
        return cls(n, red, tuple(pivots))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis_rows)

    def __len__(self) -> int:
        return self.dim

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coordinates of ``v`` in the RREF basis, or None if ``v`` is outside."""
        coords = tuple(Fraction(v[p]) for p in self.pivots)
        recon = [Fraction(0)] * self.n
        for c, row in zip(coords, self.basis_rows):
            if c:
                for i, x in enumerate(row):
                    if x:
                        recon[i] += c * x
        if any(a != b for a, b in zip(recon, v)):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.basis_rows + other.basis_rows, self.n)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.basis_rows)

    def annihilator(self) -> "Subspace":
        if self.dim == 0:
            return Subspace.full(self.n)
        return nullspace(Matrix(self.basis_rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        constraints = self.annihilator().basis_rows + other.annihilator().basis_rows
        if not constraints:
            return Subspace.full(self.n)
        return nullspace(Matrix(constraints))


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = list(as_vector(self.coeffs))
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "Polynomial":
        lead = self.coeffs[-1]
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_matrix(self, m: Matrix) -> Matrix:
        n = m.nrows
        acc = Matrix.zero(n)
        for c in reversed(self.coeffs):
            acc = (acc @ m) + Matrix.identity(n).scale(c)
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self - Polynomial(tuple(-c for c in other.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (m - len(other.coeffs))
        return Polynomial(tuple(x - y for x, y in zip(a, b)))

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        while len(rem) - 1 >= dq and rem:
            shift = len(rem) - 1 - dq
            f = rem[-1] / lead
            quot[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(tuple(quot)), Polynomial(tuple(rem))

    def divides(self, other: "Polynomial") -> bool:
        return other.divmod(self)[1].is_zero

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero else a

    def lcm(self, other: "Polynomial") -> "Polynomial":
        g = self.gcd(other)
        return (self * other).divmod(g)[0].monic()

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots, ascending (rational root theorem)."""
        if self.degree < 1:
            return []
        ints = integer_row(self.coeffs)
        roots = set()
        while ints and ints[0] == 0:
            roots.add(Fraction(0))
            ints = ints[1:]
        if len(ints) > 1:
            a0, an = abs(ints[0]), abs(ints[-1])
            for p in _divisors(a0):
                for q in _divisors(an):
                    for cand in (Fraction(p, q), Fraction(-p, q)):
                        if self(cand) == 0:
                            roots.add(cand)
        return sorted(roots)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def factored(self) -> str:
        """``t(t - 1)(t - 1/4)`` style rendering when the polynomial splits into distinct rational linear factors."""
        roots = self.rational_roots()
        if len(roots) != self.degree or self.coeffs[-1] != 1:
            return str(self)
        parts = []
        for r in roots:
            if r == 0:
                parts.append("t")
            elif r < 0:
                parts.append(f"(t + {format_rational(-r)})")
            else:
                parts.append(f"(t - {format_rational(r)})")
        return "".join(parts) if parts else "1"


def _divisors(m: int) -> list[int]:
    if m == 0:
        return [1]
    out = []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
    return out


def _int_apply(mi: list, v: list) -> list:
    return [sum(a * b for a, b in zip(row, v) if a) for row in mi]


def _local_minpoly(mi: list, v: list) -> Polynomial:
    """Minimal polynomial of the integer matrix ``mi`` relative to the vector ``v``."""
    krylov = [tuple(Fraction(x) for x in v)]
    cur = v
    while True:
        cur = _int_apply(mi, cur)
        nxt = tuple(Fraction(x) for x in cur)
        coeffs = solve_combination(krylov, nxt)
        if coeffs is not None:
            return Polynomial(tuple(-c for c in coeffs) + (Fraction(1),))
        krylov.append(nxt)


def _annihilates(p: Polynomial, mi: list, v: list) -> bool:
    """Is ``p(mi) v == 0``?  Horner's rule with the coefficients cleared of denominators."""
    ints = integer_row(p.coeffs)
    acc = [0] * len(v)
    for c in reversed(ints):
        acc = _int_apply(mi, acc)
        if c:
            acc = [x + c * y for x, y in zip(acc, v)]
    return not any(acc)


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Monic minimal polynomial: lcm of the Krylov minimal polynomials of the basis vectors.

    The work is done on the integer matrix ``d*m``; its minimal polynomial
    ``q`` gives ``d^-deg q(d t)`` for ``m``.
    """
    if not m.is_square:
        raise InputError("minimal polynomial needs a square matrix")
    n = m.nrows
    mi, d = _scaled(m.rows)
    result = Polynomial((1,))
    for i in range(n):
        e = [0] * n
        e[i] = 1
        if _annihilates(result, mi, e):
            continue
        result = result.lcm(_local_minpoly(mi, e))
    deg = result.degree
    return Polynomial(tuple(c * Fraction(d) ** (k - deg) for k, c in enumerate(result.coeffs)))
