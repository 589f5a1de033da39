"""Dataset ingestion: reference data and CSV parsing.

The one accepted input format is a UTF-8 CSV with the exact header

    label,year,group_index,population_weight,income_share

one row per subgroup, group indices numbering 1..K within each
(label, year). Weights are explicit rather than assumed equal so that
finer-than-quintile subgroup data works unchanged. Labels must not
contain commas; there is no quoting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from io import IOBase
from pathlib import Path
from typing import IO, NamedTuple, Union

from .errors import (
    DuplicateGroupError,
    FeqError,
    MalformedHeaderError,
    MalformedRowError,
    UnknownDatasetError,
    ValidationFailedError,
)
from .model import GroupedDistribution, validate_distribution

CSV_HEADER = "label,year,group_index,population_weight,income_share"

# Text weights may carry decimal rounding; accept up to this drift and
# rescale to the exact in-memory tolerance.
TEXT_WEIGHT_SUM_TOL = 1e-6

CsvSource = Union[str, Path, IO[str], IO[bytes]]


class DatasetRecord(NamedTuple):
    label: str
    year: int
    group_index: int
    population_weight: float
    income_share: float


class SkippedGroup(NamedTuple):
    """A (label, year) group dropped during lenient parsing, with cause."""

    label: str
    year: int
    reason: str


@dataclass(frozen=True)
class DatasetFile:
    """Validated raw records of one dataset file."""

    records: tuple[DatasetRecord, ...]

    def __post_init__(self):
        seen = set()
        for rec in self.records:
            key = (rec.label, rec.year, rec.group_index)
            if key in seen:
                raise DuplicateGroupError(
                    f"duplicate group {rec.group_index} for {rec.label!r} ({rec.year})"
                )
            seen.add(key)
        for (label, year), indices in self._indices_by_group().items():
            if sorted(indices) != list(range(1, len(indices) + 1)):
                raise ValidationFailedError(
                    f"{label!r} ({year}): group indices must form 1..K, "
                    f"got {sorted(indices)}"
                )

    def _indices_by_group(self) -> dict[tuple[str, int], list[int]]:
        grouped: dict[tuple[str, int], list[int]] = {}
        for rec in self.records:
            grouped.setdefault((rec.label, rec.year), []).append(rec.group_index)
        return grouped

    def to_distributions(self) -> tuple[GroupedDistribution, ...]:
        dists, issues = self._build(skip_invalid=False)
        assert not issues
        return dists

    def to_distributions_lenient(
        self,
    ) -> tuple[tuple[GroupedDistribution, ...], tuple[SkippedGroup, ...]]:
        """Like :meth:`to_distributions` but collects per-group failures."""
        return self._build(skip_invalid=True)

    def _build(self, skip_invalid: bool):
        grouped: dict[tuple[str, int], list[DatasetRecord]] = {}
        for rec in self.records:
            grouped.setdefault((rec.label, rec.year), []).append(rec)
        dists: list[GroupedDistribution] = []
        issues: list[SkippedGroup] = []
        for (label, year), recs in grouped.items():
            recs = sorted(recs, key=lambda r: r.group_index)
            weights = [r.population_weight for r in recs]
            weight_sum = sum(weights)
            if 1e-9 < abs(weight_sum - 1.0) <= TEXT_WEIGHT_SUM_TOL:
                weights = [w / weight_sum for w in weights]
            try:
                dists.append(
                    validate_distribution(
                        label, year, zip(weights, (r.income_share for r in recs))
                    )
                )
            except FeqError as err:
                if not skip_invalid:
                    raise ValidationFailedError(f"{label!r} ({year}): {err}") from err
                issues.append(SkippedGroup(label, year, str(err)))
        return tuple(dists), tuple(issues)


def _read_text(source: CsvSource) -> str:
    if isinstance(source, (str, Path)):
        return Path(source).read_text(encoding="utf-8")
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _parse_records(text: str) -> DatasetFile:
    lines = text.split("\n")
    if not lines or lines[0].rstrip("\r") != CSV_HEADER:
        got = lines[0].rstrip("\r") if lines else ""
        raise MalformedHeaderError(f"expected header {CSV_HEADER!r}, got {got!r}")
    records = []
    for line_number, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip("\r")
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != 5:
            raise MalformedRowError(
                line_number,
                f"expected 5 comma-separated fields, got {len(fields)} "
                "(labels must not contain commas)",
            )
        label, year_s, index_s, weight_s, share_s = fields
        try:
            year = int(year_s)
            group_index = int(index_s)
            weight = float(weight_s)
            share = float(share_s)
        except ValueError as err:
            raise MalformedRowError(line_number, str(err)) from None
        if not (math.isfinite(weight) and math.isfinite(share)):
            raise MalformedRowError(line_number, "weights and shares must be finite")
        records.append(DatasetRecord(label, year, group_index, weight, share))
    return DatasetFile(records=tuple(records))


def parse_csv(source: CsvSource) -> tuple[GroupedDistribution, ...]:
    """Parse a dataset CSV into validated distributions.

    Distributions come back in order of first appearance. Any structural
    or semantic problem raises; see :func:`parse_csv_lenient` when partial
    results are wanted.
    """
    return _parse_records(_read_text(source)).to_distributions()


def parse_csv_lenient(
    source: CsvSource,
) -> tuple[tuple[GroupedDistribution, ...], tuple[SkippedGroup, ...]]:
    """Parse a dataset CSV, skipping (label, year) groups that fail validation.

    Structural errors (bad header, malformed rows, duplicate groups) still
    raise; only semantic validation failures are collected.
    """
    return _parse_records(_read_text(source)).to_distributions_lenient()


_BUILTIN_ROWS = (
    ("U.S.A.", 2019, (3.1, 8.3, 14.1, 22.7, 51.9)),
    ("China", 2016, (6.5, 10.7, 15.3, 22.2, 45.3)),
    ("Finland", 2017, (9.4, 14.0, 17.4, 22.3, 36.9)),
    ("South Africa", 2014, (2.4, 4.8, 8.2, 16.5, 68.2)),
)


def dataset_slug(label: str) -> str:
    """Lookup key for a dataset label: lowercase, dots dropped, spaces dashed."""
    return label.lower().replace(".", "").replace(" ", "-")


def builtin_datasets() -> tuple[GroupedDistribution, ...]:
    """The bundled reference quintile datasets (equal 20% weights)."""
    return tuple(
        validate_distribution(label, year, [(0.2, s) for s in shares])
        for label, year, shares in _BUILTIN_ROWS
    )


def builtin_dataset(name: str) -> GroupedDistribution:
    """Look up one bundled dataset by label or slug (case-insensitive)."""
    wanted = dataset_slug(name)
    for dist in builtin_datasets():
        if dataset_slug(dist.label) == wanted:
            return dist
    known = ", ".join(dataset_slug(label) for label, _, _ in _BUILTIN_ROWS)
    raise UnknownDatasetError(f"no built-in dataset {name!r}; known: {known}")
