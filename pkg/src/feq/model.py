"""Shared domain types.

All types are immutable after construction and validate their own
invariants, so they can be passed around (and across threads) freely.
Income shares are kept in the raw percent units they arrive in; the
total is their plain sum and is never silently renormalized to 100.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    BadWeightsError,
    DegenerateWidthError,
    NegativeBetaError,
    NegativeShareError,
    TooFewGroupsError,
)

WEIGHT_SUM_TOL = 1e-9
PROBABILITY_SUM_TOL = 1e-12
INCOME_CONSISTENCY_TOL = 1e-9


class Group(NamedTuple):
    """One population subgroup: its population fraction and income share."""

    population_weight: float
    income_share: float


@dataclass(frozen=True)
class GroupedDistribution:
    """A country-year's income shares by population subgroup.

    ``groups`` must be ordered by ascending income share; use
    :func:`validate_distribution` to sort and build one from raw rows.
    """

    label: str
    year: int
    groups: tuple[Group, ...]

    def __post_init__(self):
        if len(self.groups) < 2:
            raise TooFewGroupsError(
                f"{self.label!r}: need at least 2 groups, got {len(self.groups)}"
            )
        for _, share in self.groups:
            if share < 0:
                raise NegativeShareError(f"{self.label!r}: negative income share {share}")
        weight_sum = 0.0
        for weight, _ in self.groups:
            if weight <= 0:
                raise BadWeightsError(f"{self.label!r}: non-positive weight {weight}")
            weight_sum += weight
        if abs(weight_sum - 1.0) > WEIGHT_SUM_TOL:
            raise BadWeightsError(
                f"{self.label!r}: population weights sum to {weight_sum!r}, expected 1"
            )
        shares = self.shares
        if any(a > b for a, b in zip(shares, shares[1:])):
            raise ValueError(
                f"{self.label!r}: groups must be ordered by ascending income share; "
                "construct via validate_distribution()"
            )

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(g.population_weight for g in self.groups)

    @property
    def shares(self) -> tuple[float, ...]:
        return tuple(g.income_share for g in self.groups)

    @property
    def total_income(self) -> float:
        """Raw sum of the income shares, in percent units."""
        return sum(g.income_share for g in self.groups)

    def has_equal_weights(self, tol: float = WEIGHT_SUM_TOL) -> bool:
        first = self.groups[0].population_weight
        return all(abs(g.population_weight - first) <= tol for g in self.groups)


def validate_distribution(
    label: str, year: int, groups: Iterable[tuple[float, float]]
) -> GroupedDistribution:
    """Sort raw (weight, share) rows by ascending share and validate them.

    Validation is idempotent: feeding a distribution's own groups back in
    reproduces it exactly. Sorting is stable, so equal shares keep their
    input order.
    """
    rows = [Group(float(w), float(s)) for w, s in groups]
    if not rows:
        raise TooFewGroupsError(f"{label!r}: no groups supplied")
    rows.sort(key=lambda g: g.income_share)
    return GroupedDistribution(label=label, year=int(year), groups=tuple(rows))


def representative_incomes(dist: GroupedDistribution) -> tuple[float, ...]:
    """Per-group representative household income.

    Every household in a subgroup is assumed to earn the same amount, so a
    group's share value doubles as the income of its representative
    household (percent units).
    """
    return dist.shares


@dataclass(frozen=True)
class WelfareParams:
    """Constants of the sigmoid individual welfare function.

    ``critical_low`` and ``critical_high`` bracket the income range over
    which welfare rises steeply; ``midpoint`` is their average and
    ``steepness`` controls the width of the transition (1/percent).
    """

    critical_low: float
    critical_high: float
    midpoint: float
    steepness: float

    def __post_init__(self):
        if not 0 < self.critical_low < self.critical_high:
            raise DegenerateWidthError(
                f"need 0 < critical_low < critical_high, got "
                f"({self.critical_low}, {self.critical_high})"
            )
        expected_mid = (self.critical_low + self.critical_high) / 2
        if abs(self.midpoint - expected_mid) > 1e-9:
            raise ValueError(
                f"midpoint {self.midpoint} is not the average of the critical "
                f"incomes ({expected_mid})"
            )
        if self.steepness <= 0:
            raise ValueError(f"steepness must be positive, got {self.steepness}")

    @classmethod
    def from_critical_incomes(cls, low: float, high: float) -> "WelfareParams":
        """Derive midpoint and steepness from the two critical incomes.

        The steepness 6/(high - low) places the sigmoid's 4.7%/95.3%
        utility levels exactly at the critical incomes.
        """
        if not low < high:
            raise DegenerateWidthError(
                f"critical incomes must satisfy low < high, got ({low}, {high})"
            )
        return cls(
            critical_low=low,
            critical_high=high,
            midpoint=(low + high) / 2,
            steepness=6.0 / (high - low),
        )


@dataclass(frozen=True)
class BoltzmannAllocation:
    """Softmax income allocation for one value of beta.

    ``probabilities`` are the per-group softmax weights over ``factors``;
    ``incomes`` are those probabilities scaled by the distributed total.
    """

    beta: float
    probabilities: tuple[float, ...]
    incomes: tuple[float, ...]
    factors: tuple[float, ...]

    def __post_init__(self):
        if self.beta < 0:
            raise NegativeBetaError(f"beta must be >= 0, got {self.beta}")
        n = len(self.probabilities)
        if not (n == len(self.incomes) == len(self.factors)):
            raise ValueError("probabilities, incomes and factors must have equal length")
        if any(p < 0 or p > 1 for p in self.probabilities):
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(sum(self.probabilities) - 1.0) > PROBABILITY_SUM_TOL:
            raise ValueError(
                f"probabilities sum to {sum(self.probabilities)!r}, expected 1"
            )
        total = sum(self.incomes)
        for income, prob in zip(self.incomes, self.probabilities):
            if abs(income - total * prob) > INCOME_CONSISTENCY_TOL:
                raise ValueError("incomes are not total * probabilities")
        factors_sorted = all(a <= b for a, b in zip(self.factors, self.factors[1:]))
        incomes_sorted = all(a <= b for a, b in zip(self.incomes, self.incomes[1:]))
        if factors_sorted and not incomes_sorted:
            raise ValueError("incomes must be non-decreasing when factors are")

    @property
    def total_income(self) -> float:
        return sum(self.incomes)


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of the welfare maximization over beta."""

    beta_star: float
    welfare_star: float
    optimal_allocation: BoltzmannAllocation
    sweep: tuple[tuple[float, float], ...]
    derivative_at_star: float

    def __post_init__(self):
        if any(w > self.welfare_star + 1e-9 for _, w in self.sweep):
            raise ValueError("welfare_star is below a swept welfare value")
        if self.sweep:
            lo, hi = self.sweep[0][0], self.sweep[-1][0]
            if not lo <= self.beta_star <= hi:
                raise ValueError(
                    f"beta_star {self.beta_star} outside search interval [{lo}, {hi}]"
                )


@dataclass(frozen=True)
class LorenzCurve:
    """Piecewise-linear Lorenz curve through group breakpoints.

    ``points`` are (cumulative population, cumulative income) fractions,
    starting at (0, 0) and ending at (1, 1). When the underlying groups
    are sorted by ascending income the curve is convex.
    """

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a Lorenz curve needs at least 2 points")
        x0, y0 = self.points[0]
        xn, yn = self.points[-1]
        if abs(x0) > 1e-9 or abs(y0) > 1e-9:
            raise ValueError(f"curve must start at (0, 0), got ({x0}, {y0})")
        if abs(xn - 1) > 1e-9 or abs(yn - 1) > 1e-9:
            raise ValueError(f"curve must end at (1, 1), got ({xn}, {yn})")
        for (xa, ya), (xb, yb) in zip(self.points, self.points[1:]):
            if xb < xa or yb < ya:
                raise ValueError("Lorenz curve coordinates must be non-decreasing")
