"""Command-line interface.

Subcommands:
  analyze   full pipeline on built-in or CSV data, text or JSON output
  series    per-year reports plus a Gini/beta trend for multi-year files
  gini      inequality index only, no optimization
  datasets  list the built-in reference datasets

Exit codes: 0 success, 2 input or validation error, 3 welfare maximum at
the top of the beta search interval (widen --beta-max).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import BoundaryMaximumError, FeqError
from .ingest import builtin_dataset, builtin_datasets, dataset_slug, parse_csv, parse_csv_lenient
from .metrics import gini, lorenz_curve
from .optimizer import SearchConfig
from .report import (
    analyze_many,
    emit_json,
    emit_lorenz_csv,
    emit_sweep_csv,
    emit_trend_csv,
    render_text_many,
)
from .welfare import WelfareDerivationRule

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_BOUNDARY = 3


def _add_input_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", nargs="?", default=None, help="dataset CSV file")
    parser.add_argument(
        "--builtin", metavar="NAME", help="use a built-in dataset (see `feq datasets`)"
    )


def _add_analysis_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--beta-max", type=float, default=1.0, metavar="X",
                        help="upper end of the beta search interval (default 1.0)")
    parser.add_argument("--grid-points", type=int, default=2001, metavar="N",
                        help="beta grid resolution (default 2001)")
    parser.add_argument("--L", type=float, default=None, metavar="X",
                        help="explicit critical low income (with --H)")
    parser.add_argument("--H", type=float, default=None, metavar="X",
                        help="explicit critical high income (with --L)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feq",
        description="Welfare-maximizing income distributions, Lorenz curves "
        "and Gini coefficients from grouped income shares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run the full analysis pipeline")
    _add_input_arguments(analyze)
    _add_analysis_arguments(analyze)
    analyze.add_argument("--sweep-out", metavar="FILE",
                         help="write the (beta, welfare) grid as CSV")
    analyze.add_argument("--lorenz-out", metavar="FILE",
                         help="write actual/optimal/diagonal Lorenz breakpoints as CSV")

    series = sub.add_parser("series", help="analyze a multi-year file year by year")
    series.add_argument("path", help="dataset CSV file")
    _add_analysis_arguments(series)
    series.add_argument("--trend-out", metavar="FILE",
                        help="write year,gini_actual,gini_optimal,beta_star CSV")

    gini_cmd = sub.add_parser("gini", help="Gini coefficients only")
    _add_input_arguments(gini_cmd)

    sub.add_parser("datasets", help="list built-in datasets")
    return parser


def _resolve_input(args: argparse.Namespace):
    if (args.path is None) == (args.builtin is None):
        raise FeqError("supply exactly one of: a CSV path, or --builtin NAME")
    if args.builtin is not None:
        return (builtin_dataset(args.builtin),)
    return parse_csv(Path(args.path))


def _search_config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(beta_max=args.beta_max, grid_points=args.grid_points)


def _welfare_rule(args: argparse.Namespace) -> WelfareDerivationRule:
    if (args.L is None) != (args.H is None):
        raise FeqError("--L and --H must be given together")
    if args.L is not None:
        return WelfareDerivationRule.explicit(args.L, args.H)
    return WelfareDerivationRule.quintiles()


def _cmd_analyze(args: argparse.Namespace) -> int:
    dists = _resolve_input(args)
    if len(dists) != 1 and (args.sweep_out or args.lorenz_out):
        raise FeqError(
            "--sweep-out/--lorenz-out need a single-distribution input, "
            f"got {len(dists)} distributions"
        )
    reports = analyze_many(dists, _search_config(args), _welfare_rule(args))
    sys.stdout.write(emit_json(reports) if args.json else render_text_many(reports))
    if args.sweep_out:
        Path(args.sweep_out).write_text(emit_sweep_csv(reports[0].sweep), encoding="utf-8")
    if args.lorenz_out:
        Path(args.lorenz_out).write_text(emit_lorenz_csv(reports[0]), encoding="utf-8")
    return EXIT_OK


def _cmd_series(args: argparse.Namespace) -> int:
    dists, skipped = parse_csv_lenient(Path(args.path))
    for label, year, reason in skipped:
        print(f"skipping {label!r} ({year}): {reason}", file=sys.stderr)
    reports = analyze_many(dists, _search_config(args), _welfare_rule(args))
    if args.json:
        sys.stdout.write(emit_json(reports))
    else:
        sys.stdout.write(render_text_many(reports))
        if reports:
            sys.stdout.write("\ntrend:\n")
            sys.stdout.write(
                f"  {'year':>6}{'gini_actual':>13}{'gini_optimal':>14}{'beta*':>8}\n"
            )
            for r in reports:
                sys.stdout.write(
                    f"  {r.year:>6}{r.gini_actual:>13.2f}{r.gini_optimal:>14.2f}"
                    f"{r.beta_star:>8.3f}\n"
                )
    if args.trend_out:
        Path(args.trend_out).write_text(emit_trend_csv(reports), encoding="utf-8")
    return EXIT_INPUT_ERROR if skipped else EXIT_OK


def _cmd_gini(args: argparse.Namespace) -> int:
    for dist in _resolve_input(args):
        value = gini(lorenz_curve(dist))
        print(f"{dist.label} ({dist.year})  gini = {value:.2f}")
    return EXIT_OK


def _cmd_datasets(args: argparse.Namespace) -> int:
    for dist in builtin_datasets():
        print(
            f"{dataset_slug(dist.label):<16} {dist.label} ({dist.year})  "
            f"{len(dist.groups)} groups"
        )
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "series": _cmd_series,
    "gini": _cmd_gini,
    "datasets": _cmd_datasets,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except BoundaryMaximumError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BOUNDARY
    except (FeqError, OSError, UnicodeDecodeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
