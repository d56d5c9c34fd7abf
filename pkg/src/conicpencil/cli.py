"""Command-line front end.

Exit codes: ``factor`` returns 0 (splits) / 2 (irreducible); ``pencil``
returns 0 (every member splits) / 3 (finitely many split); ``demo`` returns
0 when every worked counterexample behaves as expected.  Input errors exit 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    BivariateQuadratic,
    Direction,
    LinearForm3,
    Tolerance,
    det_pencil_cubic,
    homogenize,
)
from .errors import ConicPencilError, DegreeTooLow
from .expression import Mode, format_polynomial, format_scalar, format_split, parse_polynomial
from .factorizer import factor_ternary_quadratic, is_degenerate
from .pencil import Verdict, classify_bivariate_pencil, classify_pencil
from .reporting import complex_pair, serialize_report

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IRREDUCIBLE = 2
EXIT_FINITE = 3


def infer_mode(*texts: str) -> Mode:
    return Mode.HOMOGENEOUS3 if any("z" in t for t in texts) else Mode.AFFINE2


def _split_text(split, affine: bool) -> str:
    l1, l2 = split.lines()
    if affine:
        l1, l2 = l1.dehomogenize(), l2.dehomogenize()
    return format_split(l1, l2)


def cmd_factor(poly: str, tol: Tolerance, fmt: str, mode: Mode | None, out=None) -> int:
    mode = mode or infer_mode(poly)
    p = parse_polynomial(poly, mode)
    affine = mode is Mode.AFFINE2
    if affine:
        if not p.has_degree_two(tol):
            raise DegreeTooLow("polynomial has degree below two")
        p = homogenize(p)
    test = is_degenerate(p, tol)
    factors = _split_text(factor_ternary_quadratic(p, tol), affine) if test else None
    if fmt == "json":
        print(json.dumps({
            "schema": 1,
            "kind": "factor",
            "input": format_polynomial(p),
            "factorizable": test.degenerate,
            "det": complex_pair(test.det),
            "factors": factors,
        }, indent=2), file=out)
    elif factors:
        print(factors, file=out)
    else:
        print(f"irreducible (det = {format_scalar(test.det)})", file=out)
    return EXIT_OK if test else EXIT_IRREDUCIBLE


def cmd_pencil(p_text: str, q_text: str, tol: Tolerance, fmt: str, mode: Mode | None,
               out=None) -> int:
    mode = mode or infer_mode(p_text, q_text)
    p = parse_polynomial(p_text, mode)
    q = parse_polynomial(q_text, mode)
    if mode is Mode.AFFINE2:
        report = classify_bivariate_pencil(p, q, tol)
    else:
        report = classify_pencil(p, q, tol)
    print(serialize_report(report, fmt), file=out)
    return EXIT_OK if report.verdict is Verdict.ALL_FACTORIZABLE else EXIT_FINITE


# --------------------------------------------------------------------------
# demo: the two worked counterexamples

_DEMO_CASES = [
    ("homogeneous", "x(x+z)", "y(2x+y+z)", Mode.HOMOGENEOUS3),
    ("bivariate", "x(x+1)", "y(2x+y+1)", Mode.AFFINE2),
]
_DEMO_DIRECTIONS = [(1, 0), (0, 1), (1, 1), (2, 1)]


def run_demo(tol: Tolerance = Tolerance()) -> tuple[list[str], list[tuple[str, bool]]]:
    """Narrative lines and named pass/fail checks for both counterexamples."""
    lines: list[str] = []
    checks: list[tuple[str, bool]] = []
    for name, p_text, q_text, mode in _DEMO_CASES:
        p = parse_polynomial(p_text, mode)
        q = parse_polynomial(q_text, mode)
        affine = isinstance(p, BivariateQuadratic)
        hp, hq = (homogenize(p), homogenize(q)) if affine else (p, q)
        lines.append(f"== {name} pencil: p = {format_polynomial(p)}, q = {format_polynomial(q)}")
        cubic = det_pencil_cubic(hp, hq)
        lines.append("det cubic [a^3, a^2 b, a b^2, b^3]: ["
                     + ", ".join(format_scalar(c) for c in cubic.coefficients) + "]")
        for a, b in _DEMO_DIRECTIONS:
            r = a * hp + b * hq
            test = is_degenerate(r, tol)
            shown = format_polynomial(a * p + b * q) if affine else format_polynomial(r)
            if test:
                split = factor_ternary_quadratic(r, tol)
                lines.append(f"({a},{b}): {shown} = {_split_text(split, affine)}")
            else:
                lines.append(f"({a},{b}): {shown} is irreducible, det = {format_scalar(test.det)}")
            expect_split = (a, b) != (2, 1)
            checks.append((f"{name} ({a},{b}) {'splits' if expect_split else 'irreducible'}",
                           bool(test) == expect_split))
            if (a, b) == (1, 1) and test:
                target = [LinearForm3(1, 1, 0), LinearForm3(1, 1, 1)]
                checks.append((f"{name} (1,1) = {format_split(*(_affine(t, affine) for t in target))}",
                               split.same_lines(*target, tol)))
            if (a, b) == (2, 1) and not affine:
                checks.append((f"{name} (2,1) det = -1/2", abs(test.det + 0.5) <= 1e-12))
        report = classify_bivariate_pencil(p, q, tol) if affine else classify_pencil(p, q, tol)
        found = [fd.direction for fd in report.directions]
        expected = [Direction(1, 0), Direction(0, 1), Direction(1, 1)]
        match = (report.verdict is Verdict.FINITE and len(found) == 3
                 and all(any(d.collinear(e, tol) for d in found) for e in expected))
        lines.append(f"verdict: {report.verdict.value}, directions: "
                     + ", ".join(f"({format_scalar(d.alpha)} : {format_scalar(d.beta)})" for d in found))
        checks.append((f"{name} pencil has exactly (1:0), (0:1), (1:1)", match))
    return lines, checks


def _affine(line: LinearForm3, affine: bool):
    return line.dehomogenize() if affine else line


def cmd_demo(tol: Tolerance, fmt: str, out=None) -> int:
    lines, checks = run_demo(tol)
    ok = all(passed for _, passed in checks)
    if fmt == "json":
        print(json.dumps({
            "schema": 1,
            "kind": "demo",
            "ok": ok,
            "checks": [{"name": n, "ok": passed} for n, passed in checks],
        }, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)
        for n, passed in checks:
            print(f"[{'ok' if passed else 'FAIL'}] {n}", file=out)
    return EXIT_OK if ok else EXIT_INPUT


# --------------------------------------------------------------------------


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=_positive_float, default=1e-9,
                        help="relative zero tolerance (default 1e-9)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--mode", choices=["h3", "a2"], default=None,
                        help="h3: homogeneous in x, y, z; a2: affine in x, y "
                             "(default: h3 iff z appears)")

    parser = argparse.ArgumentParser(
        prog="conicpencil",
        description="Factor quadratic forms and classify pencils a*p + b*q.")
    sub = parser.add_subparsers(dest="command", required=True)
    f = sub.add_parser("factor", parents=[common], help="split one quadratic into linear factors")
    f.add_argument("poly")
    pen = sub.add_parser("pencil", parents=[common], help="classify the pencil of two quadratics")
    pen.add_argument("p")
    pen.add_argument("q")
    sub.add_parser("demo", parents=[common], help="replay the worked counterexamples")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    tol = Tolerance(args.tolerance)
    mode = Mode(args.mode) if args.mode else None
    try:
        if args.command == "factor":
            return cmd_factor(args.poly, tol, args.format, mode)
        if args.command == "pencil":
            return cmd_pencil(args.p, args.q, tol, args.format, mode)
        return cmd_demo(tol, args.format)
    except ConicPencilError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
