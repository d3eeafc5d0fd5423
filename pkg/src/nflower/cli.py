"""Command line front end.

Subcommands: solve, verify, layout, render, spinors, polynomial.
Exit codes: 0 pass, 1 verification fail, 2 usage or parse error, 3 numeric
failure.  `-` reads from standard input.  Reports display 12 significant
digits; documents carry 17.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .descartes import (
    m_from_normalized,
    residual_with_scale,
    solve_report,
    spinor_recursion,
    descartes_polynomial,
)
from .document import DEFAULT_TOLERANCE, FlowerDocument, fmt12
from .euclid import (
    Circle,
    NumericFailure,
    classic_descartes_residual,
    classic_descartes_scale,
    four_flower_poly_residual,
    four_flower_poly_scale,
    layout_flower,
    tangency_residuals,
)
from .svg import flower_svg


def _parse_petals(text: str) -> list[float]:
    try:
        petals = [float(f) for f in text.split(",") if f.strip()]
    except ValueError as exc:
        raise ValueError(f"bad petal list {text!r}: {exc}") from exc
    if len(petals) < 3:
        raise ValueError("need at least 3 petal curvatures")
    if any(not math.isfinite(k) or k <= 0.0 for k in petals):
        raise ValueError("petal curvatures must be positive and finite")
    return petals


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _num(x: float) -> float:
    """Report number: rounded to 12 significant digits."""
    return float(fmt12(x))


def cmd_solve(args) -> int:
    petals = _parse_petals(args.petals)
    rep = solve_report(petals, args.tol)
    rel = abs(rep.residual) / rep.residual_scale
    diff = abs(rep.polished_curvature - rep.central_curvature)
    if args.json:
        print(json.dumps({
            "central_curvature": _num(rep.central_curvature),
            "residual": _num(rep.residual),
            "residual_relative": _num(rel),
            "geometric_root": _num(rep.central_curvature),
            "equation_root": _num(rep.polished_curvature),
            "root_difference": _num(diff),
        }))
    else:
        print(f"central curvature: {fmt12(rep.central_curvature)}")
        print(f"relation residual: {fmt12(rep.residual)} (relative {fmt12(rel)})")
        print(
            f"root agreement: geometric {fmt12(rep.central_curvature)}, "
            f"equation {fmt12(rep.polished_curvature)}, difference {fmt12(diff)}"
        )
    return 0


def _verify_checks(doc: FlowerDocument, tol: float) -> list[tuple[str, bool, float, float]]:
    """(name, passed, value, threshold) rows for a document."""
    checks: list[tuple[str, bool, float, float]] = []
    if doc.circles is not None:
        central = Circle(*doc.circles[0])
        petals = [Circle(*c) for c in doc.circles[1:]]
        cen, adj = tangency_residuals(central, petals)
        worst = max(abs(x) for x in cen)
        checks.append(("central tangency", worst <= doc.tolerance, worst, doc.tolerance))
        worst = max(abs(x) for x in adj)
        checks.append(("petal adjacency", worst <= doc.tolerance, worst, doc.tolerance))
        devs = [abs(central.curvature - doc.central_curvature) / max(1.0, doc.central_curvature)]
        devs += [
            abs(p.curvature - k) / max(1.0, k) for p, k in zip(petals, doc.petal_curvatures)
        ]
        worst = max(devs)
        checks.append(("declared curvatures", worst <= doc.tolerance, worst, doc.tolerance))

    m = m_from_normalized([k / doc.central_curvature for k in doc.petal_curvatures])
    res, scale = residual_with_scale(m)
    rel = abs(res) / scale
    checks.append(("descartes relation", rel <= tol, rel, tol))

    if doc.n == 3:
        k1, k2, k3 = doc.petal_curvatures
        rel = abs(classic_descartes_residual(doc.central_curvature, k1, k2, k3)) / (
            classic_descartes_scale(doc.central_curvature, k1, k2, k3)
        )
        checks.append(("classic 3-flower relation", rel <= tol, rel, tol))
    if doc.n == 4:
        k1, k2, k3, k4 = doc.petal_curvatures
        rel = abs(four_flower_poly_residual(doc.central_curvature, k1, k2, k3, k4)) / (
            four_flower_poly_scale(doc.central_curvature, k1, k2, k3, k4)
        )
        checks.append(("4-flower quartic relation", rel <= tol, rel, tol))
    return checks


def cmd_verify(args) -> int:
    doc = FlowerDocument.from_json(_read_input(args.file))
    checks = _verify_checks(doc, args.tol)
    ok = all(passed for _, passed, _, _ in checks)
    if args.json:
        print(json.dumps({
            "passed": ok,
            "checks": [
                {"name": name, "passed": passed, "value": _num(value), "threshold": _num(thr)}
                for name, passed, value, thr in checks
            ],
        }))
    else:
        for name, passed, value, thr in checks:
            status = "PASS" if passed else "FAIL"
            print(f"{status} {name} (value {fmt12(value)}, threshold {fmt12(thr)})")
    return 0 if ok else 1


def cmd_layout(args) -> int:
    petals = _parse_petals(args.petals)
    layout = layout_flower([1.0 / k for k in petals])
    circles = [(layout.central.cx, layout.central.cy, layout.central.r)]
    circles += [(p.cx, p.cy, p.r) for p in layout.petals]
    doc = FlowerDocument(
        n=len(petals),
        central_curvature=layout.central.curvature,
        petal_curvatures=tuple(petals),
        tolerance=args.tol,
        circles=tuple(circles),
    )
    sys.stdout.write(doc.to_json())
    return 0


def cmd_render(args) -> int:
    doc = FlowerDocument.from_json(_read_input(args.file))
    if doc.circles is None:
        raise ValueError("document has no circles; produce it with `layout`")
    svg = flower_svg(doc.circles, central_index=0)
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def cmd_spinors(args) -> int:
    petals = _parse_petals(args.petals)
    rep = solve_report(petals, args.tol)
    k0 = rep.central_curvature
    m = m_from_normalized([k / k0 for k in petals])
    chain = spinor_recursion(m)
    rows = [
        (j, s.xi, s.eta, m[j], 2.0 * s.eta * s.eta)
        for j, s in enumerate(chain.spinors)
    ]
    if args.json:
        print(json.dumps({
            "central_curvature": _num(k0),
            "spinors": [
                {"j": j, "xi": _num(x), "eta": _num(e), "m": _num(mv), "flat_curvature": _num(fc)}
                for j, x, e, mv, fc in rows
            ],
        }))
    else:
        print(f"central curvature: {fmt12(k0)}")
        print(f"{'j':>3} {'xi':>18} {'eta':>18} {'m':>18} {'flat_curv':>18}")
        for j, x, e, mv, fc in rows:
            print(f"{j:>3} {fmt12(x):>18} {fmt12(e):>18} {fmt12(mv):>18} {fmt12(fc):>18}")
    return 0


def cmd_polynomial(args) -> int:
    n = args.n
    if not 3 <= n <= 24:
        raise ValueError("polynomial order must be between 3 and 24")
    sys.stdout.write(descartes_polynomial(n).serialize())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                        help="verification tolerance (default 1e-9)")
    common.add_argument("--json", action="store_true", help="machine-readable reports")

    parser = argparse.ArgumentParser(
        prog="nflower",
        description="Solve, verify, lay out, and render tangent-circle flowers.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("solve", parents=[common], help="central curvature from petal curvatures")
    p.add_argument("petals", help="comma-separated petal curvatures, e.g. 1,1,1")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a flower document")
    p.add_argument("file", help="flower document path, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("layout", parents=[common], help="emit a flower document with circles")
    p.add_argument("petals", help="comma-separated petal curvatures")
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("render", parents=[common], help="render a flower document to SVG")
    p.add_argument("file", help="flower document path, or - for stdin")
    p.add_argument("out", help="output SVG path, or - for stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("spinors", parents=[common], help="spinor table of the flat flower")
    p.add_argument("petals", help="comma-separated petal curvatures")
    p.set_defaults(func=cmd_spinors)

    p = sub.add_parser("polynomial", parents=[common], help="integer relation polynomial")
    p.add_argument("n", type=int, help="number of petals (3..24)")
    p.set_defaults(func=cmd_polynomial)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
