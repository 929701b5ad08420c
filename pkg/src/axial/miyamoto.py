"""Miyamoto involutions of a primitive two-sided axis.

Each of the three nontrivial Z2 quotients of the Z2 x Z2 grading gives a
sign map: keep the "+" part, negate the "-" part. ``lambda`` negates the
left-lambda pieces, ``delta`` the right-delta pieces, ``diag`` the two
off-diagonal pieces. When an eigenvalue is absent its pieces are zero and the
map degenerates (possibly to the identity); it is still returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from axial.algebra import AlgebraTable, Element
from axial.axis import AxisProfile, classify_axis
from axial.errors import InputError
from axial.linalg import Matrix

WHICH = ("lambda", "delta", "diag")
MAX_ORBIT = 10_000


@dataclass(frozen=True)
class AlgebraMap:
    matrix: Matrix

    def __call__(self, v: Element) -> Element:
        return Element(self.matrix.apply(v.coeffs))

    def __matmul__(self, other: "AlgebraMap") -> "AlgebraMap":
        return AlgebraMap(self.matrix @ other.matrix)

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.dim)


class OrbitOverflow(RuntimeError):
    pass


def _sign_map(profile: AxisProfile, which: str) -> AlgebraMap:
    if not profile.is_axis:
        raise InputError(f"Miyamoto maps need a primitive two-sided axis: {profile.reason}")
    blocks = profile._blocks
    signs = profile.component_signs(which)
    diag = [s for s, block in zip(signs, blocks) for _ in block]
    basis = Matrix.from_columns([v for block in blocks for v in block])
    return AlgebraMap(basis @ Matrix.diagonal(diag) @ profile._coordinate_map)


def tau_lambda(profile: AxisProfile) -> AlgebraMap:
    """Negate ``A_{lam,0} + A_{lam,dlt}``."""
    return _sign_map(profile, "lambda")


def tau_delta(profile: AxisProfile) -> AlgebraMap:
    """Negate ``A_{0,dlt} + A_{lam,dlt}``."""
    return _sign_map(profile, "delta")


def tau_diag(profile: AxisProfile) -> AlgebraMap:
    """Negate ``A_{lam,0} + A_{0,dlt}``."""
    return _sign_map(profile, "diag")


def tau(profile: AxisProfile, which: str) -> AlgebraMap:
    if which not in WHICH:
        raise InputError(f"unknown Miyamoto map {which!r}; expected one of {', '.join(WHICH)}")
    return _sign_map(profile, which)


def is_automorphism(table: AlgebraTable, f: AlgebraMap) -> bool:
    n = table.dim
    if f.dim != n or not f.matrix.is_square:
        raise InputError(f"map of size {f.dim} on an algebra of dimension {n}")
    if not f.matrix.is_invertible():
        return False
    images = [f(table.basis(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if f(table.mul(table.basis(i), table.basis(j))) != table.mul(images[i], images[j]):
                return False
    return True


def apply_to_axis(table: AlgebraTable, f: AlgebraMap, a: Element) -> Element:
    if f.dim != table.dim or len(a) != table.dim:
        raise InputError("map, element and algebra dimensions disagree")
    return f(a)


def axis_orbit(table: AlgebraTable, seeds: Iterable[Element], max_size: int = MAX_ORBIT) -> list[Element]:
    """Closure of ``seeds`` under all Miyamoto maps of the axes found so far.

    Returned in lexicographic order of coefficient vectors.
    """
    known = {}
    queue = []
    for s in seeds:
        if s.coeffs not in known:
            known[s.coeffs] = s
            queue.append(s)
    maps: list[AlgebraMap] = []
    done = 0
    while done < len(queue) or maps:
        while done < len(queue):
            profile = classify_axis(table, queue[done])
            done += 1
            if profile.is_axis:
                maps.extend(_sign_map(profile, w) for w in WHICH)
        grew = False
        for f in maps:
            for v in list(known.values()):
                img = f(v)
                if img.coeffs not in known:
                    if len(known) >= max_size:
                        raise OrbitOverflow(f"axis orbit exceeds {max_size} elements")
                    known[img.coeffs] = img
                    queue.append(img)
                    grew = True
        if not grew and done == len(queue):
            break
    return [known[k] for k in sorted(known)]
