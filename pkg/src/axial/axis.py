"""Primitive axes: classification, two-sided decompositions, fusion grading.

An idempotent ``a`` with left and right multiplication maps ``L`` and ``R``
splits the algebra into the joint eigenspaces

    A_{1,1} = Fa,  A_{0,0},  A_{lam,0},  A_{0,dlt},  A_{lam,dlt}

whenever it is a primitive two-sided axis. Grouping them by sign gives the
Z2 x Z2 grading ``++ = Fa + A_{0,0}``, ``+- = A_{0,dlt}``,
``-+ = A_{lam,0}``, ``-- = A_{lam,dlt}``.

Jordan type asks both off-diagonal pieces ``A_{lam,0}`` and ``A_{0,dlt}`` to
vanish. (The usual wording writes the second one as ``A_{0,lam}``; for an
axis of type (lam, dlt) the right-hand eigenvalue is dlt, which is what is
tested here.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from axial.algebra import AlgebraTable, Element, left_operator, right_operator, subalgebra_closure
from axial.errors import InputError
from axial.linalg import Matrix, Polynomial, Subspace, eigenspace, format_rational, minimal_polynomial, nullspace
from axial.report import VerificationReport, entry

PART_SIGNS = {"++": (1, 1), "+-": (1, -1), "-+": (-1, 1), "--": (-1, -1)}


def is_idempotent(table: AlgebraTable, a: Element) -> bool:
    return table.mul(a, a) == a


def _axis_eigenvalue(p: Polynomial) -> tuple[bool, Fraction | None]:
    """Does ``p`` divide ``t(t-1)(t-lam)`` for some lam outside {0, 1}?"""
    roots = p.rational_roots()
    if len(roots) != p.degree:
        return False, None
    extra = [r for r in roots if r not in (0, 1)]
    if len(extra) > 1:
        return False, None
    return True, (extra[0] if extra else None)


def _joint_eigenspace(left: Matrix, right: Matrix, mu, nu) -> Subspace:
    if mu is None or nu is None:
        return Subspace.zero(left.nrows)
    return nullspace(Matrix(left.shift(mu).rows + right.shift(nu).rows))


@dataclass(frozen=True)
class AxisProfile:
    axis: Element
    lam: Fraction | None
    dlt: Fraction | None
    left_minpoly: Polynomial
    right_minpoly: Polynomial
    left_axis: bool
    right_axis: bool
    primitive_left: bool
    primitive_right: bool
    operators_commute: bool
    a11: Subspace
    a00: Subspace
    al0: Subspace
    a0d: Subspace
    ald: Subspace
    is_axis: bool
    jordan_type: bool
    reason: str = ""

    @property
    def n(self) -> int:
        return self.axis.dim

    @property
    def spaces(self) -> dict:
        return {"1,1": self.a11, "0,0": self.a00, "lam,0": self.al0, "0,dlt": self.a0d, "lam,dlt": self.ald}

    @property
    def type(self) -> tuple:
        return (self.lam, self.dlt)

    def type_str(self) -> str:
        fmt = lambda q: "-" if q is None else format_rational(q)  # noqa: E731
        return f"({fmt(self.lam)}, {fmt(self.dlt)})"

    @cached_property
    def _blocks(self) -> list:
        return [[self.axis.coeffs], list(self.a00.basis_rows), list(self.al0.basis_rows),
                list(self.a0d.basis_rows), list(self.ald.basis_rows)]

    @cached_property
    def _coordinate_map(self) -> Matrix:
        if not self.is_axis:
            raise InputError(f"not a primitive two-sided axis: {self.reason}")
        cols = [v for block in self._blocks for v in block]
        return Matrix.from_columns(cols).inverse()

    def graded_parts(self) -> dict:
        """Bases of the four graded parts."""
        b = self._blocks
        return {"++": b[0] + b[1], "+-": b[3], "-+": b[2], "--": b[4]}

    def component_signs(self, which: str) -> list:
        """Per-block signs of the Miyamoto map ``which`` in (lambda, delta, diag)."""
        signs = {"lambda": [1, 1, -1, 1, -1], "delta": [1, 1, 1, -1, -1], "diag": [1, 1, -1, -1, 1]}
        return signs[which]


@dataclass(frozen=True)
class TwoSidedDecomposition:
    alpha: Fraction
    comp_00: Element
    comp_L0: Element
    comp_0D: Element
    comp_LD: Element

    def reconstruct(self, a: Element) -> Element:
        return self.alpha * a + self.comp_00 + self.comp_L0 + self.comp_0D + self.comp_LD

    def part(self, a: Element, sign: str) -> Element:
        if sign == "++":
            return self.alpha * a + self.comp_00
        return {"+-": self.comp_0D, "-+": self.comp_L0, "--": self.comp_LD}[sign]


def classify_axis(table: AlgebraTable, a: Element) -> AxisProfile:
    """Full two-sided classification of the idempotent ``a``.

    Failing the axis conditions is reported through ``is_axis``/``reason``;
    only a non-idempotent input raises.
    """
    n = table.dim
    if len(a) != n:
        raise InputError(f"element of dimension {len(a)} in an algebra of dimension {n}")
    key = ("profile", a.coeffs)
    if key not in table.memo:
        table.memo[key] = _classify(table, a)
    return table.memo[key]


def _classify(table: AlgebraTable, a: Element) -> AxisProfile:
    n = table.dim
    if not is_idempotent(table, a):
        raise InputError("element is not idempotent")
    left = left_operator(table, a)
    right = right_operator(table, a)
    pl = minimal_polynomial(left)
    pr = minimal_polynomial(right)
    left_ok, lam = _axis_eigenvalue(pl)
    right_ok, dlt = _axis_eigenvalue(pr)
    commute = (left @ right) == (right @ left)
    fa = Subspace.span([a.coeffs], n)
    prim_left = left_ok and eigenspace(left, 1) == fa and fa.dim == 1
    prim_right = right_ok and eigenspace(right, 1) == fa and fa.dim == 1
    a11 = _joint_eigenspace(left, right, 1, 1)
    a00 = _joint_eigenspace(left, right, 0, 0)
    al0 = _joint_eigenspace(left, right, lam, 0)
    a0d = _joint_eigenspace(left, right, 0, dlt)
    ald = _joint_eigenspace(left, right, lam, dlt)

    reason = ""
    if not left_ok:
        reason = f"left minimal polynomial {pl} is not of the form t(t-1)(t-lam)"
    elif not right_ok:
        reason = f"right minimal polynomial {pr} is not of the form t(t-1)(t-dlt)"
    elif not prim_left:
        reason = "left 1-eigenspace is not spanned by the axis"
    elif not prim_right:
        reason = "right 1-eigenspace is not spanned by the axis"
    elif not commute:
        reason = "left and right multiplications do not commute"
    else:
        total = a11 + a00 + al0 + a0d + ald
        dims = a11.dim + a00.dim + al0.dim + a0d.dim + ald.dim
        if a11 != fa or total.dim != n or dims != n:
            reason = "joint eigenspaces do not decompose the algebra"
    is_axis = not reason
    jordan = is_axis and al0.dim == 0 and a0d.dim == 0
    return AxisProfile(a, lam, dlt, pl, pr, left_ok, right_ok, prim_left, prim_right, commute,
                       a11, a00, al0, a0d, ald, is_axis, jordan, reason)


def decompose(profile: AxisProfile, v: Element) -> TwoSidedDecomposition:
    """Split ``v`` as ``alpha*a + v00 + v_lam0 + v_0dlt + v_lamdlt``."""
    coords = profile._coordinate_map.apply(v.coeffs)
    blocks = profile._blocks
    n = profile.n
    comps = []
    pos = 1
    for block in blocks[1:]:
        acc = Element.zero(n)
        for vec in block:
            c = coords[pos]
            if c:
                acc = acc + c * Element(vec)
            pos += 1
        comps.append(acc)
    out = TwoSidedDecomposition(coords[0], *comps)
    assert out.reconstruct(profile.axis) == v
    return out


def check_fusion(table: AlgebraTable, profile: AxisProfile) -> VerificationReport:
    """Check the Z2 x Z2 grading on every pair of graded basis vectors.

    The residual of an entry is the part of ``u*v`` lying outside the graded
    part predicted by the signs of ``u`` and ``v``.
    """
    if not profile.is_axis:
        raise InputError(f"fusion rules need a primitive two-sided axis: {profile.reason}")
    parts = profile.graded_parts()
    a = profile.axis
    report = VerificationReport()
    for (p, pvecs), (q, qvecs) in itertools.product(parts.items(), repeat=2):
        s = PART_SIGNS[p]
        t = PART_SIGNS[q]
        target = {v: k for k, v in PART_SIGNS.items()}[(s[0] * t[0], s[1] * t[1])]
        for i, u in enumerate(pvecs):
            for j, w in enumerate(qvecs):
                prod = table.mul(Element(u), Element(w))
                inside = decompose(profile, prod).part(a, target)
                report.add(entry(f"fusion[{p}*{q}->{target}]({i},{j})", (prod - inside).coeffs))
    return report


def jordan_residual(profile: AxisProfile) -> int:
    """Codimension of ``Fa + A_{0,0} + A_{lam,dlt}`` in the algebra."""
    n = profile.n
    span = profile.a11 + profile.a00 + profile.ald
    return n - span.dim


@dataclass(frozen=True)
class TwoGeneratedFrame:
    """Decompositions of two primitive axes against each other.

    ``b = alpha_b a + c + x + y + z`` over the grading of ``a`` and
    ``a = beta_a b + c' + x' + y' + z'`` over the grading of ``b``.
    """

    profile_a: AxisProfile
    profile_b: AxisProfile
    alpha_b: Fraction
    beta_a: Fraction
    c: Element
    x: Element
    y: Element
    z: Element
    c_prime: Element
    x_prime: Element
    y_prime: Element
    z_prime: Element
    closure: Subspace

    @property
    def a(self) -> Element:
        return self.profile_a.axis

    @property
    def b(self) -> Element:
        return self.profile_b.axis

    @property
    def lam(self) -> Fraction:
        return self.profile_a.lam

    @property
    def dlt(self) -> Fraction:
        return self.profile_a.dlt

    @property
    def lam_b(self) -> Fraction:
        return self.profile_b.lam

    @property
    def dlt_b(self) -> Fraction:
        return self.profile_b.dlt

    def swapped(self) -> "TwoGeneratedFrame":
        return TwoGeneratedFrame(self.profile_b, self.profile_a, self.beta_a, self.alpha_b,
                                 self.c_prime, self.x_prime, self.y_prime, self.z_prime,
                                 self.c, self.x, self.y, self.z, self.closure)


class FrameError(InputError):
    """The pair cannot be framed (not axes, equal generators, or spanning fails)."""


def _typed_profile(table: AlgebraTable, v: Element, name: str) -> AxisProfile:
    try:
        p = classify_axis(table, v)
    except InputError as exc:
        raise FrameError(f"{name}: {exc}") from None
    if not p.is_axis:
        raise FrameError(f"{name} is not a primitive two-sided axis: {p.reason}")
    if p.lam is None or p.dlt is None:
        raise FrameError(f"{name} has no eigenvalue outside {{0, 1}} on one side; its type is undetermined")
    return p


def build_frame(table: AlgebraTable, a: Element, b: Element) -> TwoGeneratedFrame:
    if a == b:
        raise FrameError("the two generators must be distinct")
    pa = _typed_profile(table, a, "a")
    pb = _typed_profile(table, b, "b")
    db = decompose(pa, b)
    da = decompose(pb, a)
    closure, _ = subalgebra_closure(table, [a, b])
    frame = TwoGeneratedFrame(pa, pb, db.alpha, da.alpha, db.comp_00, db.comp_L0, db.comp_0D, db.comp_LD,
                              da.comp_00, da.comp_L0, da.comp_0D, da.comp_LD, closure)
    n = table.dim
    span_a = Subspace.span([v.coeffs for v in (a, frame.c, frame.x, frame.y, frame.z)], n)
    span_b = Subspace.span([v.coeffs for v in (b, frame.c_prime, frame.x_prime, frame.y_prime, frame.z_prime)], n)
    if span_a != closure or span_b != closure:
        raise FrameError(
            f"generated subalgebra (dim {closure.dim}) is not spanned by the frame components "
            f"(dims {span_a.dim}, {span_b.dim})"
        )
    return frame


def find_idempotents(table: AlgebraTable, values: Sequence = (0, 1, -1),
                     extra: Iterable[Element] = (), max_candidates: int = 200_000) -> list[Element]:
    """Nonzero idempotents among vectors with coefficients drawn from ``values``.

    Exhaustive over ``values**n``; user-supplied ``extra`` elements are tested
    too. This is a finite search, not a solver for ``a*a = a``.
    """
    n = table.dim
    vals = sorted({Fraction(v) for v in values})
    if len(vals) ** n > max_candidates:
        raise InputError(f"{len(vals)}^{n} candidates exceed the search cap {max_candidates}")
    found = []
    seen = set()
    for coeffs in itertools.product(vals, repeat=n):
        e = Element(coeffs)
        if not e.is_zero() and is_idempotent(table, e):
            found.append(e)
            seen.add(coeffs)
    for e in extra:
        if e.coeffs not in seen and not e.is_zero() and is_idempotent(table, e):
            found.append(e)
            seen.add(e.coeffs)
    return found
