"""Sigmoid individual welfare and total social welfare.

Individual welfare of income y is

    U(y) = 1 / (1 + exp(a * (m - y)))

with midpoint m and steepness a: U rises from ~0 below the critical low
income to ~1 above the critical high income, crossing 0.5 at m. Total
welfare sums one utility term per subgroup (scaled for unequal group
sizes), so its maximizer over allocations is invariant to population size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import (
    BadWeightsError,
    DegenerateWidthError,
    LengthMismatchError,
    RuleMismatchError,
)
from .model import GroupedDistribution, WelfareParams, representative_incomes


@dataclass(frozen=True)
class WelfareDerivationRule:
    """How to obtain the critical low/high incomes for a distribution.

    ``quintile_default`` reads them off five equal-weight groups: the low
    critical income is the mean of the 2nd and 3rd shares, the high one
    the mean of the 4th and 5th (ascending order). ``explicit`` uses
    user-supplied values, e.g. for data with a different group count.
    """

    mode: Literal["quintile_default", "explicit"] = "quintile_default"
    explicit_low: float | None = None
    explicit_high: float | None = None

    def __post_init__(self):
        if self.mode == "explicit":
            low, high = self.explicit_low, self.explicit_high
            if low is None or high is None:
                raise ValueError("explicit mode requires explicit_low and explicit_high")
            if not 0 < low < high:
                raise DegenerateWidthError(
                    f"explicit critical incomes must satisfy 0 < low < high, "
                    f"got ({low}, {high})"
                )
        elif self.mode != "quintile_default":
            raise ValueError(f"unknown mode {self.mode!r}")

    @classmethod
    def quintiles(cls) -> "WelfareDerivationRule":
        return cls(mode="quintile_default")

    @classmethod
    def explicit(cls, low: float, high: float) -> "WelfareDerivationRule":
        return cls(mode="explicit", explicit_low=low, explicit_high=high)


def derive_welfare_params(
    dist: GroupedDistribution, rule: WelfareDerivationRule | None = None
) -> WelfareParams:
    """Derive sigmoid constants from a distribution under ``rule``.

    Raises RuleMismatchError when the quintile rule meets data that is not
    five equal-weight groups, and DegenerateWidthError when the derived
    critical incomes collapse (high <= low).
    """
    rule = rule or WelfareDerivationRule.quintiles()
    if rule.mode == "explicit":
        return WelfareParams.from_critical_incomes(rule.explicit_low, rule.explicit_high)

    if len(dist.groups) != 5:
        raise RuleMismatchError(
            f"{dist.label!r}: quintile rule needs exactly 5 groups, "
            f"got {len(dist.groups)}"
        )
    if not dist.has_equal_weights():
        raise RuleMismatchError(
            f"{dist.label!r}: quintile rule needs equal population weights"
        )
    incomes = representative_incomes(dist)
    low = (incomes[1] + incomes[2]) / 2
    high = (incomes[3] + incomes[4]) / 2
    if high - low <= 0:
        raise DegenerateWidthError(
            f"{dist.label!r}: derived critical incomes are degenerate "
            f"(low={low}, high={high})"
        )
    return WelfareParams.from_critical_incomes(low, high)


def sigmoid_utility(income: float, params: WelfareParams) -> float:
    """Individual welfare U(income), strictly increasing from 0 to 1.

    Evaluated in the overflow-safe form: the exponential argument is kept
    negative, so extreme incomes saturate to exactly 0.0 or 1.0 instead of
    overflowing.
    """
    t = params.steepness * (params.midpoint - income)
    if t >= 0:
        e = math.exp(-t)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(t))


def sigmoid_utility_slope(income: float, params: WelfareParams) -> float:
    """dU/dy at ``income``: steepness * U * (1 - U)."""
    u = sigmoid_utility(income, params)
    return params.steepness * u * (1.0 - u)


def total_welfare(
    incomes: Sequence[float], weights: Sequence[float], params: WelfareParams
) -> float:
    """Total social welfare of per-group incomes.

    Equal-weight groups contribute one utility term each; unequal weights
    are scaled relative to the smallest group, so a group twice the size
    counts twice. The scaling leaves equal-weight totals untouched and
    never changes the location of a welfare maximum.
    """
    if len(incomes) != len(weights):
        raise LengthMismatchError(
            f"{len(incomes)} incomes vs {len(weights)} weights"
        )
    w_min = min(weights)
    if w_min <= 0:
        raise BadWeightsError(f"weights must be positive, got minimum {w_min}")
    return sum(
        (w / w_min) * sigmoid_utility(y, params) for y, w in zip(incomes, weights)
    )
