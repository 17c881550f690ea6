"""Command-line front end.

Commands: eval, scan-k, limiting, paneitz, rules, closed-form.
Exit codes: 0 success, 2 usage or validation, 3 numerical failure,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .chebyshev import v_coefficients
from .errors import (
    AccuracyError,
    DivergentIntegralError,
    EvaluationError,
    InternalConsistencyError,
    ParameterError,
    UnsupportedArgumentError,
)
from .quadrature import QuadratureSpec
from .scans import (
    ScanRow,
    format_csv,
    max_pairwise_discrepancy,
    scan_k,
    scan_limiting,
    scan_paneitz,
    write_csv,
    write_svg,
)
from .spectral import METHODS, SpherePoint, closed_form_p4, logdet

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

_METHOD_CHOICES = ("direct", "sum", "chebyshev", "product", "all")


def _spec_from(tol: Optional[float]) -> Optional[QuadratureSpec]:
    if tol is None:
        return None
    # decay_rate is a placeholder here; each evaluation replaces the
    # envelope fields with the exact values for its own integrand.
    return QuadratureSpec(decay_rate=1.0, rel_tol=tol)


def _canon_methods(selector: str) -> tuple[str, ...]:
    if selector == "all":
        return METHODS
    if selector == "product":
        return ("product_rule",)
    return (selector,)


def _cmd_eval(args) -> int:
    point = SpherePoint(args.d, args.k)
    spec = _spec_from(args.tol)
    print(f"d={point.d} k={point.k}")
    values = []
    for tag in _canon_methods(args.method):
        res = logdet(point, tag, spec)
        values.append(res.value)
        print(f"{res.method:<13} {res.value:.17g}   err {res.err_estimate:.3g}")
    if len(values) > 1:
        print(f"max pairwise discrepancy: {max_pairwise_discrepancy(values):.3g}")
    return EXIT_OK


def _emit_rows(args, rows: list[ScanRow], x_of_row, x_label: str) -> int:
    if args.out:
        write_csv(args.out, rows)
    else:
        sys.stdout.write(format_csv(rows))
    if args.svg:
        # one polyline per chart: with several methods, plot the first tag
        tag = rows[0].method
        line = [r for r in rows if r.method == tag]
        write_svg(
            args.svg,
            [x_of_row(r) for r in line],
            [r.value for r in line],
            x_label=x_label,
            y_label="log det",
        )
    return EXIT_OK


def _cmd_scan_k(args) -> int:
    rows = scan_k(args.d, args.method, _spec_from(args.tol))
    return _emit_rows(args, rows, lambda r: r.k, "k")


def _cmd_limiting(args) -> int:
    rows = scan_limiting(args.d_min, args.d_max, args.method, _spec_from(args.tol))
    return _emit_rows(args, rows, lambda r: r.d, "d")


def _cmd_paneitz(args) -> int:
    rows = scan_paneitz(args.d_min, args.d_max, args.method, _spec_from(args.tol))
    return _emit_rows(args, rows, lambda r: r.d, "d")


def _cmd_rules(args) -> int:
    rule = v_coefficients(args.k)
    factors = []
    for j, power in enumerate(rule.v):
        dim = "d" if j == 0 else f"d-{2 * j}"
        factors.append(f"P_2^{power}({dim})")
    print(f"P_{2 * args.k}(d) ~ " + " ".join(factors))
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    dims = (args.d,) if args.d is not None else (5, 7)
    for d in dims:
        res = closed_form_p4(d)
        print(
            f"closed_form d={d} k=2: {res.value:.17g}   err {res.err_estimate:.3g}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjmsdet",
        description=(
            "Log-determinants of scalar GJMS operators on odd-dimensional "
            "round spheres, by four mutually checking evaluation routes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument(
            "--tol", type=float, default=None, help="relative quadrature tolerance"
        )

    def add_output(p):
        p.add_argument("--out", default=None, help="CSV output path (default stdout)")
        p.add_argument("--svg", default=None, help="also write an SVG chart here")

    def add_method(p, default="direct"):
        p.add_argument(
            "--method", choices=_METHOD_CHOICES, default=default,
            help=f"evaluation route (default {default})",
        )

    p = sub.add_parser("eval", help="evaluate one (d, k) point")
    p.add_argument("--d", type=int, required=True, help="odd sphere dimension >= 3")
    p.add_argument("--k", type=int, required=True, help="order, 1 <= k <= (d-1)/2")
    add_method(p, default="all")
    add_tol(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("scan-k", help="all allowed k at fixed d")
    p.add_argument("--d", type=int, required=True)
    add_method(p)
    add_tol(p)
    add_output(p)
    p.set_defaults(func=_cmd_scan_k)

    p = sub.add_parser("limiting", help="k = (d-1)/2 over a dimension range")
    p.add_argument("--d-min", type=int, default=3)
    p.add_argument("--d-max", type=int, default=21)
    add_method(p)
    add_tol(p)
    add_output(p)
    p.set_defaults(func=_cmd_limiting)

    p = sub.add_parser("paneitz", help="k = 2 over a dimension range")
    p.add_argument("--d-min", type=int, default=5)
    p.add_argument("--d-max", type=int, default=21)
    add_method(p)
    add_tol(p)
    add_output(p)
    p.set_defaults(func=_cmd_paneitz)

    p = sub.add_parser("rules", help="print the determinant product rule for k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_rules)

    p = sub.add_parser("closed-form", help="closed forms for k = 2, d = 5 and 7")
    p.add_argument("--d", type=int, default=None, choices=(5, 7))
    p.set_defaults(func=_cmd_closed_form)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, UnsupportedArgumentError, DivergentIntegralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AccuracyError, EvaluationError, InternalConsistencyError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
