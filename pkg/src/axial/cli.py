"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a checked property fails,
2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from axial.algebra import AlgebraTable, Element, subalgebra_closure
from axial.axis import AxisProfile, check_fusion, classify_axis
from axial.constructions import (dim2_algebra, load_fischer_space, matsuo_algebra, one_line_space,
                                 transposition_space)
from axial.errors import InputError
from axial.formats import algebra_to_json, dump_algebra, load_algebra
from axial.linalg import format_rational, parse_rational
from axial.miyamoto import WHICH, is_automorphism, tau
from axial.report import VerificationReport
from axial.verify import basis_axes, random_cases, run_suites

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

BUILTIN_SPACES = {"line3": one_line_space, "s4": lambda: transposition_space(4)}


class _Style:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def _wrap(self, code: str, text: str) -> str:
        return f"\033[{code}m{text}\033[0m" if self.enabled else text

    def ok(self, text: str) -> str:
        return self._wrap("32", text)

    def bad(self, text: str) -> str:
        return self._wrap("31", text)

    def dim(self, text: str) -> str:
        return self._wrap("2", text)


def _style() -> _Style:
    flag = os.environ.get("AXIAL_COLOR")
    if flag is not None:
        return _Style(flag not in ("0", ""))
    return _Style(sys.stdout.isatty())


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors through ``InputError``."""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _split_selectors(text: str) -> list[str]:
    """Split on commas that are not inside ``[...]``."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    if any(not s for s in out):
        raise InputError(f"empty selector in {text!r}")
    return out


def parse_axis(table: AlgebraTable, text: str) -> tuple[Element, str]:
    """Resolve a selector: basis index, basis label, or ``[p/q, ...]`` coefficient vector."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise InputError(f"unterminated coefficient vector {text!r}")
        body = text[1:-1].strip()
        parts = [p.strip() for p in body.split(",")] if body else []
        e = table.element([parse_rational(p) for p in parts])
        return e, e.format(table.basis_labels)
    if re.fullmatch(r"\d+", text):
        k = int(text)
        if k >= table.dim:
            raise InputError(f"basis index {k} is out of range for dimension {table.dim}")
        return table.basis(k), table.basis_labels[k]
    return table.basis(table.index(text)), text


def _profile_json(p: AxisProfile) -> dict:
    fmt = lambda q: None if q is None else format_rational(q)  # noqa: E731
    return {
        "axis": [format_rational(c) for c in p.axis.coeffs],
        "is_axis": p.is_axis,
        "lambda": fmt(p.lam),
        "delta": fmt(p.dlt),
        "left_minimal_polynomial": p.left_minpoly.factored(),
        "right_minimal_polynomial": p.right_minpoly.factored(),
        "primitive_left": p.primitive_left,
        "primitive_right": p.primitive_right,
        "operators_commute": p.operators_commute,
        "jordan_type": p.jordan_type,
        "eigenspace_dims": {k: s.dim for k, s in p.spaces.items()},
        "reason": p.reason,
    }


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _print_report(report: VerificationReport, style: _Style, failures_only: bool = False) -> None:
    for e in report.entries:
        if e.vacuous:
            if not failures_only:
                print(f"{style.dim('VACUOUS')} {e.identity_id}  ({e.note})")
        elif e.passed:
            if not failures_only:
                note = f"  ({e.note})" if e.note else ""
                print(f"{style.ok('PASS')} {e.identity_id}{note}")
        else:
            res = ", ".join(format_rational(r) for r in e.residual)
            note = f"  ({e.note})" if e.note else ""
            print(f"{style.bad('FAIL')} {e.identity_id}  residual [{res}]{note}")


def cmd_classify(args, style: _Style) -> int:
    table = load_algebra(args.algebra)
    a, label = parse_axis(table, args.axis)
    p = classify_axis(table, a)
    if args.format == "json":
        _emit_json(_profile_json(p))
        return EXIT_OK if p.is_axis else EXIT_FAILED
    print(f"element: {label}")
    if p.is_axis:
        kind = "Jordan" if p.jordan_type else "not Jordan"
        print(f"type {p.type_str()}, primitive, {kind}")
    else:
        prim = "primitive" if p.primitive_left and p.primitive_right else "not primitive"
        print(f"{style.bad('not a primitive two-sided axis')}: {p.reason} ({prim})")
    print(f"left minimal polynomial:  {p.left_minpoly.factored()}")
    print(f"right minimal polynomial: {p.right_minpoly.factored()}")
    dims = ", ".join(f"A[{k}]={s.dim}" for k, s in p.spaces.items())
    print(f"eigenspace dimensions: {dims}")
    return EXIT_OK if p.is_axis else EXIT_FAILED


def _verify_random(args, style: _Style) -> int:
    if args.random < 1:
        raise InputError("--random needs a positive count")
    results = []
    for name, table in random_cases(args.random, args.seed):
        axes, labels = basis_axes(table)
        results.append((name, run_suites(table, axes, labels)))
    ok = all(r.passed and len(r) for _, r in results)
    if args.format == "json":
        _emit_json([{"case": name, "entries": r.to_json()} for name, r in results])
    else:
        for name, r in results:
            mark = style.ok("PASS") if r.passed else style.bad("FAIL")
            print(f"{mark} {name}: {len(r)} checks, {len(r.failures)} failed")
            _print_report(r, style, failures_only=True)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args, style: _Style) -> int:
    if args.random is not None:
        if args.algebra or args.axis or args.all_axes:
            raise InputError("--random builds its own algebras; drop --algebra/--axis/--all-axes")
        return _verify_random(args, style)
    if not args.algebra:
        raise InputError("verify needs --algebra (or --random N)")
    table = load_algebra(args.algebra)
    if args.all_axes:
        if args.axis:
            raise InputError("use either --axis or --all-axes, not both")
        if table.dim < 2:
            raise InputError("verify needs two generators; the algebra has dimension 1")
        axes = [table.basis(i) for i in range(table.dim)]
        labels = list(table.basis_labels)
    else:
        selectors = args.axis or []
        if len(selectors) < 2:
            raise InputError("verify needs two axis selectors (repeat --axis) or --all-axes")
        axes, labels = [], []
        for s in selectors:
            e, lbl = parse_axis(table, s)
            axes.append(e)
            labels.append(lbl)
        if len(set(e.coeffs for e in axes)) != len(axes):
            raise InputError("axis selectors must name distinct elements")
    report = run_suites(table, axes, labels)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        _print_report(report, style)
        summary = f"{len(report)} checks, {len(report.failures)} failed"
        print(style.ok(summary) if report.passed else style.bad(summary))
    return EXIT_OK if report.passed else EXIT_FAILED


def _load_space(spec: str):
    if spec in BUILTIN_SPACES:
        return BUILTIN_SPACES[spec]()
    return load_fischer_space(spec)


def cmd_make(args, style: _Style) -> int:
    if args.family == "dim2":
        if args.lam is None:
            raise InputError("--family dim2 needs --lambda")
        if args.space or args.eta:
            raise InputError("--space/--eta only apply to --family matsuo")
        table = dim2_algebra(parse_rational(args.lam))
    else:
        if args.eta is None or args.space is None:
            raise InputError("--family matsuo needs --space and --eta")
        if args.lam is not None:
            raise InputError("--lambda only applies to --family dim2")
        table = matsuo_algebra(_load_space(args.space), parse_rational(args.eta))
    if args.output in (None, "-"):
        sys.stdout.write(dump_algebra(table))
    else:
        dump_algebra(table, args.output)
        if args.format == "json":
            _emit_json({"written": args.output, "dim": table.dim})
        else:
            print(f"wrote {args.output} (dim {table.dim})")
    return EXIT_OK


def _matrix_lines(m) -> list[str]:
    cells = [[format_rational(x) for x in row] for row in m.rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return ["[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells]


def cmd_miyamoto(args, style: _Style) -> int:
    table = load_algebra(args.algebra)
    a, label = parse_axis(table, args.axis)
    p = classify_axis(table, a)
    if not p.is_axis:
        raise InputError(f"{label} is not a primitive two-sided axis: {p.reason}")
    which = [args.which] if args.which else list(WHICH)
    axes, axis_labels = basis_axes(table)
    ok = True
    results = []
    for w in which:
        f = tau(p, w)
        involution = (f @ f).is_identity()
        auto = is_automorphism(table, f)
        ok = ok and involution and auto
        images = []
        for e, lbl in zip(axes, axis_labels):
            img = f(e)
            images.append((lbl, img))
        results.append((w, f, auto, involution, images))
    if args.format == "json":
        _emit_json([{
            "which": w,
            "matrix": [[format_rational(x) for x in row] for row in f.matrix.rows],
            "automorphism": auto,
            "involution": inv,
            "images": {lbl: [format_rational(c) for c in img.coeffs] for lbl, img in images},
        } for w, f, auto, inv, images in results])
    else:
        yes = lambda flag: style.ok("yes") if flag else style.bad("no")  # noqa: E731
        for w, f, auto, inv, images in results:
            print(f"tau_{w} of {label}:")
            for line in _matrix_lines(f.matrix):
                print(f"  {line}")
            print(f"automorphism: {yes(auto)}, involution: {yes(inv)}")
            for lbl, img in images:
                print(f"  {lbl} -> {img.format(table.basis_labels)}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_closure(args, style: _Style) -> int:
    table = load_algebra(args.algebra)
    gens = [parse_axis(table, s)[0] for s in _split_selectors(args.gens)]
    space, induced = subalgebra_closure(table, gens)
    if args.format == "json":
        _emit_json({
            "dim": space.dim,
            "basis": [[format_rational(c) for c in row] for row in space.basis_rows],
            "induced": algebra_to_json(induced),
        })
        return EXIT_OK
    print(f"dim {space.dim}")
    for lbl in induced.basis_labels:
        print(f"  basis: {lbl}")
    r = induced.dim
    for i in range(r):
        for j in range(r):
            prod = Element(induced.gamma[i][j])
            if not prod.is_zero():
                print(f"  ({induced.basis_labels[i]}) * ({induced.basis_labels[j]}) = "
                      f"{prod.format([f'({s})' for s in induced.basis_labels])}")
    return EXIT_OK


def cmd_fusion(args, style: _Style) -> int:
    table = load_algebra(args.algebra)
    a, label = parse_axis(table, args.axis)
    p = classify_axis(table, a)
    if not p.is_axis:
        raise InputError(f"{label} is not a primitive two-sided axis: {p.reason}")
    report = check_fusion(table, p)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        dims = ", ".join(f"{k}: {len(v)}" for k, v in p.graded_parts().items())
        print(f"axis {label}, type {p.type_str()}; graded part dimensions {dims}")
        _print_report(report, style, failures_only=True)
        if report.passed:
            print(style.ok(f"all graded products OK ({len(report)} checked)"))
        else:
            print(style.bad(f"{len(report.failures)} of {len(report)} graded products violate the grading"))
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="axial", description="Exact checks on primitive axes of finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, algebra=True):
        if algebra:
            p.add_argument("--algebra", required=True, metavar="PATH", help="algebra JSON file")
        p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("classify", help="classify an idempotent")
    common(p)
    p.add_argument("--axis", required=True, help="basis index, basis label, or [p/q,...] vector")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run every verification suite")
    common(p, algebra=False)
    p.add_argument("--algebra", metavar="PATH", help="algebra JSON file")
    p.add_argument("--axis", action="append", help="axis selector (give at least two)")
    p.add_argument("--all-axes", action="store_true", help="use every basis vector (each must be a primitive axis)")
    p.add_argument("--random", type=int, metavar="N", help="check N seeded random parameter instances")
    p.add_argument("--seed", type=int, default=0, help="seed for --random (default 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("make", help="write an example algebra")
    p.add_argument("--family", choices=("dim2", "matsuo"), required=True)
    p.add_argument("--lambda", dest="lam", metavar="P/Q")
    p.add_argument("--eta", metavar="P/Q")
    p.add_argument("--space", help="Fischer space JSON file, or builtin 'line3' / 's4'")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("miyamoto", help="build the sign automorphisms of an axis")
    common(p)
    p.add_argument("--axis", required=True)
    p.add_argument("--which", choices=WHICH, help="one map (default: all three)")
    p.set_defaults(func=cmd_miyamoto)

    p = sub.add_parser("closure", help="subalgebra generated by elements")
    common(p)
    p.add_argument("--gens", required=True, help="comma-separated selectors, e.g. a,b or 0,[1/2,1/2,0]")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("fusion", help="check the Z2 x Z2 grading of an axis")
    common(p)
    p.add_argument("--axis", required=True)
    p.set_defaults(func=cmd_fusion)
    return parser


def main(argv=None) -> int:
    style = _style()
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "seed", 0) is not None and getattr(args, "seed", 0) < 0:
            raise InputError("--seed must be a non-negative integer")
        return args.func(args, style)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        # --help exits 0; argparse errors are routed through InputError above
        return int(exc.code or 0)
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); not an error of ours
        sys.stderr.close()
        return EXIT_OK
    except RecursionError as exc:
        print(f"error: input too deeply nested ({exc})", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
