"""Boltzmann (softmax) income allocation.

Income is split over groups with probabilities proportional to
exp(beta * factor): beta = 0 shares income uniformly, large beta
concentrates it on the highest-factor groups. Factors default to the
groups' own representative incomes (proportionality constant 1; any
other constant would just rescale beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import LengthMismatchError, NegativeBetaError
from .model import BoltzmannAllocation, GroupedDistribution, representative_incomes


@dataclass(frozen=True)
class FactorModel:
    """Source of the per-group income-distribution factors."""

    mode: Literal["proportional_to_actual_income", "explicit"] = (
        "proportional_to_actual_income"
    )
    explicit_factors: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.mode == "explicit":
            if self.explicit_factors is None:
                raise ValueError("explicit mode requires explicit_factors")
        elif self.mode != "proportional_to_actual_income":
            raise ValueError(f"unknown mode {self.mode!r}")

    @classmethod
    def proportional(cls) -> "FactorModel":
        return cls(mode="proportional_to_actual_income")

    @classmethod
    def explicit(cls, factors: Sequence[float]) -> "FactorModel":
        return cls(mode="explicit", explicit_factors=tuple(float(f) for f in factors))


def income_factors(
    dist: GroupedDistribution, model: FactorModel | None = None
) -> tuple[float, ...]:
    """Per-group economic-contribution factors for ``dist``."""
    model = model or FactorModel.proportional()
    if model.mode == "explicit":
        factors = model.explicit_factors
        if len(factors) != len(dist.groups):
            raise LengthMismatchError(
                f"{len(factors)} factors for {len(dist.groups)} groups"
            )
        return factors
    return representative_incomes(dist)


def _softmax(factors: Sequence[float], beta: float) -> tuple[float, ...]:
    # Max-subtracted exponentials: identical result, no overflow for any
    # beta * factor magnitude. Accepts negative beta (internal use only).
    top = max(factors)
    weights = [math.exp(beta * (f - top)) for f in factors]
    norm = sum(weights)
    return tuple(w / norm for w in weights)


def boltzmann_probabilities(
    factors: Sequence[float], beta: float
) -> tuple[float, ...]:
    """Softmax probabilities exp(beta*f_i) / sum_j exp(beta*f_j).

    Shift-invariant in the factors and exactly uniform at beta = 0.
    """
    if not factors:
        raise ValueError("factors must be non-empty")
    if beta < 0:
        raise NegativeBetaError(f"beta must be >= 0, got {beta}")
    return _softmax(factors, beta)


def allocate_income(
    dist: GroupedDistribution, factors: Sequence[float], beta: float
) -> BoltzmannAllocation:
    """Allocate the distribution's total income over groups at ``beta``.

    Incomes are total_income * probabilities, so they conserve the total
    exactly up to float rounding.
    """
    probs = boltzmann_probabilities(factors, beta)
    total = dist.total_income
    return BoltzmannAllocation(
        beta=beta,
        probabilities=probs,
        incomes=tuple(total * p for p in probs),
        factors=tuple(float(f) for f in factors),
    )
