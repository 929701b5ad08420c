"""JSON files for algebras.

An algebra file is an object::

    {"dim": 2, "basis": ["a", "b"],
     "products": [{"i": 0, "j": 1, "coeffs": ["2/3", "1/3"]}, ...]}

Pairs ``(i, j)`` that do not appear multiply to zero. Rationals are strings
``"p"`` or ``"p/q"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from axial.algebra import MAX_DIM, AlgebraTable
from axial.errors import InputError
from axial.linalg import format_rational, parse_rational


def _read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from None


def _index(value, n: int, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{what} must be an integer, got {value!r}")
    if not 0 <= value < n:
        raise InputError(f"{what} = {value} is out of range for dimension {n}")
    return value


def _rational(value, what: str) -> Fraction:
    if not isinstance(value, str):
        raise InputError(f"{what} must be a rational string, got {value!r}")
    try:
        return parse_rational(value)
    except InputError as exc:
        raise InputError(f"{what}: {exc}") from None


def algebra_from_json(raw, source: str = "<input>") -> AlgebraTable:
    if not isinstance(raw, dict):
        raise InputError(f"{source}: expected a JSON object")
    missing = [k for k in ("dim", "products") if k not in raw]
    if missing:
        raise InputError(f"{source}: missing key(s) {', '.join(missing)}")
    n = raw["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"{source}: 'dim' must be a positive integer")
    if n > MAX_DIM:
        raise InputError(f"{source}: dimension {n} exceeds the supported maximum {MAX_DIM}")
    basis = raw.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
            raise InputError(f"{source}: 'basis' must be an array of strings")
        if len(basis) != n:
            raise InputError(f"{source}: {len(basis)} basis labels for dimension {n}")
    products = raw["products"]
    if not isinstance(products, list):
        raise InputError(f"{source}: 'products' must be an array")
    try:
        gamma = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for idx, item in enumerate(products):
            where = f"products[{idx}]"
            if not isinstance(item, dict):
                raise InputError(f"{where} is not an object")
            for key in ("i", "j", "coeffs"):
                if key not in item:
                    raise InputError(f"{where} lacks '{key}'")
            i = _index(item["i"], n, f"{where}.i")
            j = _index(item["j"], n, f"{where}.j")
            if (i, j) in seen:
                raise InputError(f"{where}: duplicate product entry for ({i}, {j})")
            seen.add((i, j))
            coeffs = item["coeffs"]
            if not isinstance(coeffs, list) or len(coeffs) != n:
                raise InputError(f"{where}.coeffs must be an array of {n} rational strings")
            gamma[i][j] = [_rational(c, f"{where}.coeffs[{k}]") for k, c in enumerate(coeffs)]
        return AlgebraTable(gamma, basis)
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def algebra_to_json(table: AlgebraTable) -> dict:
    n = table.dim
    products = []
    for i in range(n):
        for j in range(n):
            cell = table.gamma[i][j]
            if any(cell):
                products.append({"i": i, "j": j, "coeffs": [format_rational(c) for c in cell]})
    return {"dim": n, "basis": list(table.basis_labels), "products": products}


def load_algebra(path) -> AlgebraTable:
    return algebra_from_json(_read_json(path), source=str(path))


def dump_algebra(table: AlgebraTable, path=None) -> str:
    """Serialize ``table``; also write it to ``path`` when given."""
    text = json.dumps(algebra_to_json(table), indent=2) + "\n"
    if path is not None:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc}") from None
    return text
