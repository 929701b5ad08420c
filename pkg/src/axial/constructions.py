"""Example algebras: the two-dimensional axial algebra and Matsuo algebras.

Matsuo convention used here: on a line ``{p, q, r}`` of a Fischer space,
``p*q = (eta/4)(p + q - r)``, so every point is an axis of type
``(eta/2, eta/2)`` and ``L_p`` has minimal polynomial ``t(t-1)(t-eta/2)``.
Non-collinear points multiply to zero and each point is idempotent.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from axial.algebra import AlgebraTable
from axial.errors import InputError


@dataclass(frozen=True)
class FischerSpace:
    points: tuple
    lines: tuple

    def __post_init__(self):
        validate_fischer_space(self.points, self.lines)

    def third_point(self, p: int, q: int) -> int | None:
        for line in self.lines:
            if p in line and q in line:
                (r,) = set(line) - {p, q}
                return r
        return None


def validate_fischer_space(points, lines) -> None:
    n = len(points)
    if len(set(points)) != n:
        raise InputError("point labels must be distinct")
    owner = {}
    for idx, line in enumerate(lines):
        if len(line) != 3:
            raise InputError(f"line {idx} has {len(line)} points, expected 3")
        for p in line:
            if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
                raise InputError(f"line {idx} refers to point {p!r}, which is not an index below {n}")
        if len(set(line)) != 3:
            raise InputError(f"line {idx} repeats a point: {list(line)}")
        for p, q in itertools.combinations(sorted(line), 2):
            if (p, q) in owner:
                raise InputError(f"lines {owner[(p, q)]} and {idx} share the points {p} and {q}")
            owner[(p, q)] = idx


def fischer_space(points, lines) -> FischerSpace:
    return FischerSpace(tuple(str(p) for p in points), tuple(tuple(line) for line in lines))


def one_line_space() -> FischerSpace:
    return fischer_space(["a", "b", "c"], [[0, 1, 2]])


def _compose(s: tuple, t: tuple) -> tuple:
    """``(s t)(i) = s(t(i))``."""
    return tuple(s[t[i]] for i in range(len(t)))


def _transposition(m: int, i: int, j: int) -> tuple:
    perm = list(range(m))
    perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm)


def transposition_space(m: int = 4) -> FischerSpace:
    """Fischer space of the transpositions of the symmetric group on ``m`` letters.

    Two transpositions are collinear when they do not commute; the third
    point of their line is the conjugate ``s t s``.
    """
    pairs = list(itertools.combinations(range(m), 2))
    perms = [_transposition(m, i, j) for i, j in pairs]
    index = {p: k for k, p in enumerate(perms)}
    lines = set()
    for a, b in itertools.combinations(range(len(perms)), 2):
        s, t = perms[a], perms[b]
        if _compose(s, t) == _compose(t, s):
            continue
        c = index[_compose(_compose(s, t), s)]
        lines.add(tuple(sorted((a, b, c))))
    labels = [f"({i + 1}{j + 1})" for i, j in pairs]
    return fischer_space(labels, sorted(lines))


def load_fischer_space(path) -> FischerSpace:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from None
    return fischer_space_from_json(raw, source=str(path))


def fischer_space_from_json(raw, source: str = "<input>") -> FischerSpace:
    if not isinstance(raw, dict) or "points" not in raw or "lines" not in raw:
        raise InputError(f"{source}: expected an object with 'points' and 'lines'")
    points, lines = raw["points"], raw["lines"]
    if not isinstance(points, list) or not isinstance(lines, list):
        raise InputError(f"{source}: 'points' and 'lines' must be arrays")
    for idx, line in enumerate(lines):
        if not isinstance(line, list):
            raise InputError(f"{source}: line {idx} is not an array")
    try:
        return fischer_space(points, lines)
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def fischer_space_to_json(space: FischerSpace) -> dict:
    return {"points": list(space.points), "lines": [list(line) for line in space.lines]}


def dim2_algebra(lam) -> AlgebraTable:
    """Basis {a, b}: ``a^2 = a``, ``b^2 = b``, ``ab = (1-lam)a + lam b``, ``ba = (1-lam)b + lam a``.

    Both basis vectors are primitive axes of type ``(lam, 1 - lam)``.
    """
    lam = Fraction(lam)
    if lam in (0, 1):
        raise InputError(f"lambda must lie outside {{0, 1}}, got {lam}")
    if lam == Fraction(1, 2):
        raise InputError("lambda = 1/2 gives lambda = delta, which the two-dimensional family excludes")
    dlt = 1 - lam
    gamma = [
        [[1, 0], [dlt, lam]],
        [[lam, dlt], [0, 1]],
    ]
    return AlgebraTable(gamma, ["a", "b"])


def matsuo_algebra(space: FischerSpace, eta) -> AlgebraTable:
    eta = Fraction(eta)
    if eta in (0, 2):
        raise InputError(f"eta must lie outside {{0, 2}} (axis eigenvalue eta/2 outside {{0, 1}}), got {eta}")
    n = len(space.points)
    k = eta / 4
    zero = Fraction(0)
    gamma = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for p in range(n):
        gamma[p][p][p] = Fraction(1)
    for line in space.lines:
        for p, q in itertools.permutations(line, 2):
            (r,) = set(line) - {p, q}
            cell = gamma[p][q]
            cell[p] += k
            cell[q] += k
            cell[r] -= k
    return AlgebraTable(gamma, space.points)


def matrix_unit_algebra(m: int = 2) -> AlgebraTable:
    """Associative algebra of ``m x m`` matrices on the matrix units ``e_ij``."""
    units = [(i, j) for i in range(m) for j in range(m)]
    n = len(units)
    gamma = [[[0] * n for _ in range(n)] for _ in range(n)]
    for x, (i, j) in enumerate(units):
        for y, (k, l) in enumerate(units):
            if j == k:
                gamma[x][y][units.index((i, l))] = 1
    return AlgebraTable(gamma, [f"e{i + 1}{j + 1}" for i, j in units])
