"""End-to-end analysis reports and their text/CSV/JSON renderings.

One report bundles, for a single (label, year) distribution: the derived
welfare parameters, the welfare-maximizing beta, the actual-vs-optimal
share table, both Lorenz curves, both Gini values, and the welfare sweep.

Reporting convention: ``beta_star`` is the exact maximizer, but the
optimal rows of a report are evaluated at ``beta_reported``, beta* quoted
at table precision (3 decimals). A printed table is then reproducible
from the beta it displays; the welfare curve is flat enough near its peak
that quoting precision moves shares by a few tenths of a point, so the
two conventions are distinguishable. Machine output carries both values.

All emitters are deterministic: the same report yields byte-identical
output. Machine formats carry full float precision (shortest round-trip
form); text tables round shares to 1 decimal, Gini to 2, beta to 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .allocation import FactorModel, allocate_income, income_factors
from .errors import MalformedHeaderError, MalformedRowError
from .ingest import CSV_HEADER
from .metrics import compare_distributions, gini, lorenz_curve
from .model import GroupedDistribution, LorenzCurve, WelfareParams
from .optimizer import SearchConfig, maximize_welfare
from .welfare import WelfareDerivationRule, derive_welfare_params

REPORTED_BETA_DECIMALS = 3

SWEEP_HEADER = "beta,welfare"
LORENZ_HEADER = "which,cum_population,cum_income"
TREND_HEADER = "year,gini_actual,gini_optimal,beta_star"


@dataclass(frozen=True)
class AnalysisReport:
    """Full analysis of one grouped income distribution."""

    label: str
    year: int
    welfare_params: WelfareParams
    beta_star: float
    beta_reported: float
    welfare_star: float
    derivative_at_star: float
    actual_shares: tuple[float, ...]
    optimal_shares: tuple[float, ...]
    differences: tuple[float, ...]
    gini_actual: float
    gini_optimal: float
    lorenz_actual: LorenzCurve
    lorenz_optimal: LorenzCurve
    sweep: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if abs(self.gini_optimal - gini(self.lorenz_optimal)) > 1e-12:
            raise ValueError("gini_optimal disagrees with lorenz_optimal")
        if abs(self.gini_actual - gini(self.lorenz_actual)) > 1e-12:
            raise ValueError("gini_actual disagrees with lorenz_actual")
        for a, o, d in zip(self.actual_shares, self.optimal_shares, self.differences):
            if abs(d - (a - o)) > 1e-9:
                raise ValueError("differences disagree with share columns")


def analyze_distribution(
    dist: GroupedDistribution,
    search: SearchConfig | None = None,
    welfare_rule: WelfareDerivationRule | None = None,
    factor_model: FactorModel | None = None,
) -> AnalysisReport:
    """Run the full pipeline on one distribution."""
    factors = income_factors(dist, factor_model)
    params = derive_welfare_params(dist, welfare_rule)
    optimum = maximize_welfare(dist, params, factors, search)

    beta_reported = round(optimum.beta_star, REPORTED_BETA_DECIMALS)
    reported_allocation = allocate_income(dist, factors, beta_reported)
    comparison = compare_distributions(dist, reported_allocation)

    return AnalysisReport(
        label=dist.label,
        year=dist.year,
        welfare_params=params,
        beta_star=optimum.beta_star,
        beta_reported=beta_reported,
        welfare_star=optimum.welfare_star,
        derivative_at_star=optimum.derivative_at_star,
        actual_shares=dist.shares,
        optimal_shares=tuple(r.optimal_share for r in comparison.rows),
        differences=comparison.differences,
        gini_actual=comparison.gini_actual,
        gini_optimal=comparison.gini_optimal,
        lorenz_actual=lorenz_curve(dist),
        lorenz_optimal=lorenz_curve(reported_allocation, weights=dist.weights),
        sweep=optimum.sweep,
    )


def analyze_many(
    dists: Sequence[GroupedDistribution],
    search: SearchConfig | None = None,
    welfare_rule: WelfareDerivationRule | None = None,
    factor_model: FactorModel | None = None,
) -> tuple[AnalysisReport, ...]:
    """Analyze several distributions, preserving input order."""
    return tuple(
        analyze_distribution(d, search, welfare_rule, factor_model) for d in dists
    )


# -- text rendering -----------------------------------------------------------


def _group_labels(report: AnalysisReport) -> list[str]:
    n = len(report.actual_shares)
    prefix = "Q" if n == 5 else "G"
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def render_text(report: AnalysisReport) -> str:
    """Human-readable block: parameters, beta*, and the share table."""
    p = report.welfare_params
    opt_label = f"optimal (beta* = {report.beta_reported:.3f})"
    rows = [
        ("actual", report.actual_shares, report.gini_actual),
        (opt_label, report.optimal_shares, report.gini_optimal),
        ("difference", report.differences, report.gini_actual - report.gini_optimal),
    ]
    label_w = max(len(r[0]) for r in rows) + 2
    header = f"{'income':<{label_w}}" + "".join(
        f"{name:>8}" for name in _group_labels(report)
    ) + f"{'Gini':>8}"

    lines = [
        f"{report.label} ({report.year})",
        f"  welfare: critical_low = {p.critical_low:.2f}  "
        f"critical_high = {p.critical_high:.2f}  midpoint = {p.midpoint:.2f}  "
        f"steepness = {p.steepness:.2f}",
        f"  beta* = {report.beta_star:.3f}  peak welfare = {report.welfare_star:.4f}",
        "",
        "  " + header,
    ]
    for name, values, gini_value in rows:
        cells = "".join(f"{v:>8.1f}" for v in values)
        lines.append(f"  {name:<{label_w}}{cells}{gini_value:>8.2f}")
    return "\n".join(lines) + "\n"


def render_text_many(reports: Sequence[AnalysisReport]) -> str:
    return "\n".join(render_text(r) for r in reports)


# -- JSON ---------------------------------------------------------------------


def report_to_dict(report: AnalysisReport) -> dict:
    p = report.welfare_params
    return {
        "label": report.label,
        "year": report.year,
        "welfare_params": {
            "critical_low": p.critical_low,
            "critical_high": p.critical_high,
            "midpoint": p.midpoint,
            "steepness": p.steepness,
        },
        "beta_star": report.beta_star,
        "beta_reported": report.beta_reported,
        "welfare_star": report.welfare_star,
        "derivative_at_star": report.derivative_at_star,
        "actual_shares": list(report.actual_shares),
        "optimal_shares": list(report.optimal_shares),
        "differences": list(report.differences),
        "gini_actual": report.gini_actual,
        "gini_optimal": report.gini_optimal,
        "lorenz_actual": [list(pt) for pt in report.lorenz_actual.points],
        "lorenz_optimal": [list(pt) for pt in report.lorenz_optimal.points],
        "sweep": [list(pair) for pair in report.sweep],
    }


def emit_json(reports: Sequence[AnalysisReport]) -> str:
    """JSON array of report objects, full precision, stable field order."""
    return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"


# -- CSV emission and re-parsing ---------------------------------------------


def emit_sweep_csv(sweep: Sequence[tuple[float, float]]) -> str:
    lines = [SWEEP_HEADER]
    lines.extend(f"{beta!r},{welfare!r}" for beta, welfare in sweep)
    return "\n".join(lines) + "\n"


def read_sweep_csv(text: str) -> tuple[tuple[float, float], ...]:
    rows = _read_csv(text, SWEEP_HEADER, 2)
    return tuple((float(b), float(w)) for b, w in rows)


def emit_lorenz_csv(report: AnalysisReport) -> str:
    """Breakpoints of the actual, optimal, and diagonal reference curves."""
    lines = [LORENZ_HEADER]
    for which, points in (
        ("actual", report.lorenz_actual.points),
        ("optimal", report.lorenz_optimal.points),
        ("diagonal", tuple((x, x) for x, _ in report.lorenz_actual.points)),
    ):
        lines.extend(f"{which},{x!r},{y!r}" for x, y in points)
    return "\n".join(lines) + "\n"


def read_lorenz_csv(text: str) -> dict[str, tuple[tuple[float, float], ...]]:
    curves: dict[str, list[tuple[float, float]]] = {}
    for which, x, y in _read_csv(text, LORENZ_HEADER, 3):
        curves.setdefault(which, []).append((float(x), float(y)))
    return {which: tuple(pts) for which, pts in curves.items()}


def emit_trend_csv(reports: Sequence[AnalysisReport]) -> str:
    """Per-year inequality trend rows, in report order."""
    lines = [TREND_HEADER]
    lines.extend(
        f"{r.year},{r.gini_actual!r},{r.gini_optimal!r},{r.beta_star!r}"
        for r in reports
    )
    return "\n".join(lines) + "\n"


def read_trend_csv(text: str) -> tuple[tuple[int, float, float, float], ...]:
    rows = _read_csv(text, TREND_HEADER, 4)
    return tuple(
        (int(y), float(ga), float(go), float(b)) for y, ga, go, b in rows
    )


def emit_datasets_csv(dists: Sequence[GroupedDistribution]) -> str:
    """Distributions in the ingestion CSV format (full precision)."""
    lines = [CSV_HEADER]
    for dist in dists:
        for i, (weight, share) in enumerate(dist.groups, start=1):
            lines.append(f"{dist.label},{dist.year},{i},{weight!r},{share!r}")
    return "\n".join(lines) + "\n"


def _read_csv(text: str, header: str, n_fields: int) -> list[list[str]]:
    lines = text.split("\n")
    if not lines or lines[0].rstrip("\r") != header:
        raise MalformedHeaderError(f"expected header {header!r}")
    rows = []
    for line_number, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip("\r")
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != n_fields:
            raise MalformedRowError(line_number, f"expected {n_fields} fields")
        rows.append(fields)
    return rows
