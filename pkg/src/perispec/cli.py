"""Command-line front end.

Subcommands:
  eigs      tabulate exact eigenvalues over a wavenumber grid
  figure    reproduce the eigenvalues-vs-asymptotics comparison tables
  validate  run the validation suites and report pass/fail

Exit statuses: 0 ok, 1 validation failure, 2 usage error, 3 numerical failure.
All output is deterministic: identical configuration yields byte-identical
tables (timings go to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import tables, validation
from .eigenvalues import EvalPolicy, MaterialParams
from .hyper import PrecisionExhaustedError
from .oracle import QuadratureConvergenceError, oracle_selftest

EXIT_OK = 0
EXIT_VALIDATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL_FAILURE = 3


def _material(args) -> MaterialParams:
    return MaterialParams(
        n=args.dim,
        delta=args.delta,
        beta=args.beta,
        mu=args.mu,
        lambda_star=args.lambda_star,
    )


def _rows_to_dicts(columns, rows) -> List[dict]:
    return [{col: getattr(row, col) for col in columns} for row in rows]


def _emit(columns, dict_rows: List[dict], fmt: str, out: str) -> None:
    if fmt == "csv":
        text = _render_csv(columns, dict_rows)
    else:
        text = json.dumps(dict_rows, sort_keys=False) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii")


def _render_csv(columns, dict_rows: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in dict_rows:
        writer.writerow([tables.format_cell(row[col]) for col in columns])
    return buf.getvalue()


def cmd_eigs(args) -> int:
    params = _material(args)
    policy = EvalPolicy(mode=args.policy, z_switch=args.z_switch)
    samples = tables.eigs_table(params, args.nu_min, args.nu_max, args.points, policy, args.tol)
    _emit(tables.EIGS_COLUMNS, _rows_to_dicts(tables.EIGS_COLUMNS, samples), args.format, args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    single = args.beta is not None and args.delta is not None
    panels = tables.default_panels(args.dim, args.beta, args.delta)
    if single:
        beta, delta = panels[0]
        rows = tables.figure_table(args.dim, beta, delta, args.mu, args.lambda_star, tol=args.tol)
        _emit(tables.FIGURE_COLUMNS, _rows_to_dicts(tables.FIGURE_COLUMNS, rows), args.format, args.out)
        return EXIT_OK
    out_dir = Path("." if args.out == "-" else args.out)
    if out_dir.exists() and not out_dir.is_dir():
        raise ValueError(f"--out must be a directory for a panel set, got {out_dir}")
    out_dir.mkdir(parents=True, exist_ok=True)
    for beta, delta in panels:
        rows = tables.figure_table(args.dim, beta, delta, args.mu, args.lambda_star, tol=args.tol)
        name = f"figure_dim{args.dim}_beta{beta:g}_delta{delta:g}.{args.format}"
        _emit(
            tables.FIGURE_COLUMNS,
            _rows_to_dicts(tables.FIGURE_COLUMNS, rows),
            args.format,
            str(out_dir / name),
        )
        print(out_dir / name)
    return EXIT_OK


def cmd_validate(args) -> int:
    results = validation.run_validation(args.level)
    if args.format == "json":
        payload = {
            "level": args.level,
            "passed": all(r.passed for r in results),
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }
        sys.stdout.write(json.dumps(payload, sort_keys=False) + "\n")
    else:
        for r in results:
            print(r.line())
        print(("OK" if all(r.passed for r in results) else "FAILED") + f" ({args.level} level)")
    for r in results:
        print(f"  {r.name}: {r.elapsed_s:.1f}s", file=sys.stderr)
    if args.oracle_report is not None:
        report = oracle_selftest()
        Path(args.oracle_report).write_text(report.to_json(indent=2), encoding="ascii")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VALIDATION_FAILURE


def _add_material_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dim", type=int, required=True, help="spatial dimension n")
    p.add_argument("--beta", type=float, required=True, help="kernel exponent")
    p.add_argument("--delta", type=float, default=1.0, help="interaction horizon")
    p.add_argument("--mu", type=float, default=1.0, help="shear modulus")
    p.add_argument("--lambda-star", dest="lambda_star", type=float, default=2.0, help="second Lame parameter")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perispec",
        description="Eigenvalues of the linear peridynamic operator and their large-wavenumber asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eigs = sub.add_parser("eigs", help="tabulate eigenvalues over a wavenumber grid")
    _add_material_flags(p_eigs)
    p_eigs.add_argument("--nu-min", type=float, default=0.0)
    p_eigs.add_argument("--nu-max", type=float, default=30.0)
    p_eigs.add_argument("--points", type=int, default=1000)
    p_eigs.add_argument("--tol", type=float, default=1e-10, help="relative tolerance of the series")
    p_eigs.add_argument("--policy", choices=("series", "hybrid"), default="hybrid")
    p_eigs.add_argument("--z-switch", dest="z_switch", type=float, default=20.0)
    p_eigs.add_argument("--format", choices=("csv", "json"), default="csv")
    p_eigs.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_eigs.set_defaults(func=cmd_eigs)

    p_fig = sub.add_parser(
        "figure",
        help="exact vs asymptotic tables, 1000 points on [0, 30]; omit --beta/--delta for the default panel set",
    )
    p_fig.add_argument("--dim", type=int, choices=(2, 3), required=True)
    p_fig.add_argument("--beta", type=float, default=None)
    p_fig.add_argument("--delta", type=float, default=None)
    p_fig.add_argument("--mu", type=float, default=1.0)
    p_fig.add_argument("--lambda-star", dest="lambda_star", type=float, default=2.0)
    p_fig.add_argument("--tol", type=float, default=1e-10)
    p_fig.add_argument("--format", choices=("csv", "json"), default="csv")
    p_fig.add_argument("--out", default="-", help="file for a single panel, directory for the panel set")
    p_fig.set_defaults(func=cmd_figure)

    p_val = sub.add_parser("validate", help="run the validation suites")
    p_val.add_argument("--level", choices=("quick", "full"), default="quick")
    p_val.add_argument("--format", choices=("text", "json"), default="text")
    p_val.add_argument(
        "--oracle-report",
        default=None,
        help="also write the full quadrature-vs-series lattice report (JSON) to this path",
    )
    p_val.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhaustedError, QuadratureConvergenceError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL_FAILURE


if __name__ == "__main__":
    sys.exit(main())
