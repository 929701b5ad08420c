"""Finite-dimensional algebras given by exact structure constants.

No associativity or commutativity is assumed anywhere: ``gamma[i][j][k]`` is
the coefficient of ``e_k`` in ``e_i * e_j`` and nothing else is implied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from axial import kernels
from axial.errors import InputError
from axial.linalg import Matrix, Subspace, as_vector, format_rational, rref, unit_vector

MAX_DIM = 64


@dataclass(frozen=True)
class Element:
    """Coefficient vector over a table's basis."""

    coeffs: tuple

    @classmethod
    def of(cls, values: Iterable) -> "Element":
        return cls(as_vector(values))

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls((Fraction(0),) * n)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "Element") -> None:
        if len(other.coeffs) != len(self.coeffs):
            raise InputError(f"elements of different dimensions ({self.dim} vs {other.dim})")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "Element":
        if isinstance(scalar, Element):
            return NotImplemented
        s = Fraction(scalar)
        return Element(tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def format(self, labels: Sequence[str] | None = None) -> str:
        labels = labels or [f"e{i}" for i in range(self.dim)]
        parts = []
        for c, name in zip(self.coeffs, labels):
            if c == 0:
                continue
            if c == 1:
                term = name
            elif c == -1:
                term = f"-{name}"
            else:
                term = f"{format_rational(c)}*{name}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _lcm_den(values: Iterable[Fraction]) -> int:
    den = 1
    for x in values:
        d = x.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return den


class AlgebraTable:
    """An ``n``-dimensional algebra over Q, ``e_i e_j = sum_k gamma[i][j][k] e_k``."""

    def __init__(self, gamma: Sequence, basis_labels: Sequence[str] | None = None):
        n = len(gamma)
        if n > MAX_DIM:
            raise InputError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
        rows = []
        for i, row in enumerate(gamma):
            if len(row) != n:
                raise InputError(f"gamma[{i}] has {len(row)} entries, expected {n}")
            cells = []
            for j, cell in enumerate(row):
                if len(cell) != n:
                    raise InputError(f"gamma[{i}][{j}] has {len(cell)} entries, expected {n}")
                cells.append(as_vector(cell))
            rows.append(tuple(cells))
        self.gamma: tuple = tuple(rows)
        if basis_labels is None:
            basis_labels = [f"e{i}" for i in range(n)]
        labels = [str(s) for s in basis_labels]
        if len(labels) != n:
            raise InputError(f"{len(labels)} basis labels for dimension {n}")
        if len(set(labels)) != n:
            raise InputError("basis labels must be distinct")
        self.basis_labels: tuple = tuple(labels)
        # per-element results of expensive derived computations (e.g. axis profiles);
        # safe because a table never changes after construction
        self.memo: dict = {}

    @property
    def dim(self) -> int:
        return len(self.gamma)

    def __repr__(self) -> str:
        return f"AlgebraTable(dim={self.dim}, basis={list(self.basis_labels)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraTable) and self.gamma == other.gamma and self.basis_labels == other.basis_labels

    def __hash__(self) -> int:
        return hash((self.gamma, self.basis_labels))

    @cached_property
    def _kernel_data(self):
        n = self.dim
        den = _lcm_den(c for row in self.gamma for cell in row for c in cell)
        nz = []
        for i in range(n):
            for j in range(n):
                cell = self.gamma[i][j]
                ks = tuple(k for k in range(n) if cell[k])
                gs = tuple(cell[k].numerator * (den // cell[k].denominator) for k in ks)
                nz.append((ks, gs))
        return nz, den

    def basis(self, i: int) -> Element:
        return Element(unit_vector(self.dim, i))

    def element(self, values: Iterable) -> Element:
        e = Element.of(values)
        if e.dim != self.dim:
            raise InputError(f"element has {e.dim} coefficients, algebra has dimension {self.dim}")
        return e

    def index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise InputError(f"unknown basis label {label!r}") from None

    def mul(self, u: Element, v: Element) -> Element:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise InputError(f"cannot multiply elements of dimensions {len(u)}, {len(v)} in dimension {n}")
        nz, den = self._kernel_data
        du = _lcm_den(u.coeffs)
        dv = _lcm_den(v.coeffs)
        ui = [c.numerator * (du // c.denominator) for c in u.coeffs]
        vi = [c.numerator * (dv // c.denominator) for c in v.coeffs]
        raw = kernels.contract(nz, n, ui, vi)
        scale = du * dv * den
        return Element(tuple(Fraction(s, scale) for s in raw))

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.gamma[i][j] == self.gamma[j][i] for i in range(n) for j in range(i + 1, n))

    def perturbed(self, i: int, j: int, k: int, delta=1) -> "AlgebraTable":
        """Copy with ``gamma[i][j][k]`` shifted by ``delta``."""
        g = [[list(cell) for cell in row] for row in self.gamma]
        g[i][j][k] += Fraction(delta)
        return AlgebraTable(g, self.basis_labels)

    def transported(self, change: Matrix) -> "AlgebraTable":
        """Same algebra in the basis ``f_j = sum_i change[i][j] e_i``."""
        if not change.is_invertible() or change.nrows != self.dim:
            raise InputError("basis change must be an invertible square matrix of the algebra's size")
        inv = change.inverse()
        cols = [Element(c) for c in change.columns()]
        n = self.dim
        g = [[list(inv.apply(self.mul(cols[i], cols[j]).coeffs)) for j in range(n)] for i in range(n)]
        return AlgebraTable(g, [f"f{i}" for i in range(n)])


def multiply(table: AlgebraTable, u: Element, v: Element) -> Element:
    return table.mul(u, v)


def left_operator(table: AlgebraTable, a: Element) -> Matrix:
    """Matrix of ``v -> a*v``; column ``j`` holds ``a*e_j``."""
    n = table.dim
    return Matrix.from_columns([table.mul(a, table.basis(j)).coeffs for j in range(n)])


def right_operator(table: AlgebraTable, a: Element) -> Matrix:
    """Matrix of ``v -> v*a``; column ``j`` holds ``e_j*a``."""
    n = table.dim
    return Matrix.from_columns([table.mul(table.basis(j), a).coeffs for j in range(n)])


def subalgebra_closure(table: AlgebraTable, generators: Sequence[Element]) -> tuple[Subspace, AlgebraTable]:
    """Smallest subalgebra containing ``generators`` and its induced table.

    Each round multiplies all pairs of the current basis and adjoins the
    products; the rank grows every productive round, so at most ``n`` rounds
    can make progress.
    """
    n = table.dim
    if not generators:
        raise InputError("closure needs at least one generator")
    for g in generators:
        if len(g) != n:
            raise InputError(f"generator of dimension {len(g)} in an algebra of dimension {n}")
    basis, pivots = rref([g.coeffs for g in generators], n)
    for _ in range(n + 1):
        elems = [Element(r) for r in basis]
        products = [table.mul(u, v).coeffs for u in elems for v in elems]
        new_basis, new_pivots = rref(list(basis) + products, n)
        if len(new_pivots) == len(pivots):
            break
        basis, pivots = new_basis, new_pivots
    else:
        raise AssertionError("closure did not reach a fixpoint within n rounds")
    space = Subspace(n, basis, tuple(pivots))
    r = space.dim
    elems = [Element(row) for row in basis]
    gamma = []
    for i in range(r):
        row = []
        for j in range(r):
            w = table.mul(elems[i], elems[j]).coeffs
            coords = space.coordinates(w)
            assert coords is not None, "closure basis is not closed under the product"
            row.append(coords)
        gamma.append(row)
    labels = [Element(b).format(table.basis_labels) for b in basis]
    if len(set(labels)) != r:
        labels = [f"v{i}" for i in range(r)]
    return space, AlgebraTable(gamma, labels)
