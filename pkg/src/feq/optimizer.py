"""Search for the welfare-maximizing concentration parameter beta.

Strategy: evaluate welfare on a uniform beta grid, then refine the best
grid cell with a derivative-free golden-section search. The grid guards
against multiple local maxima; the refinement needs no derivative and
never leaves its bracketing interval. A finite-difference first-derivative
estimate at the optimum is attached to the result as an optimality check.

Sweep evaluations are mutually independent; results are returned in grid
order regardless of how callers schedule them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .allocation import _softmax, allocate_income
from .errors import BoundaryMaximumError
from .model import GroupedDistribution, OptimizationResult, WelfareParams
from .welfare import total_welfare

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SearchConfig:
    """Search interval and resolution for the beta optimization."""

    beta_min: float = 0.0
    beta_max: float = 1.0
    grid_points: int = 2001
    refine_tolerance: float = 1e-6
    derivative_step: float = 1e-4

    def __post_init__(self):
        if not self.beta_min < self.beta_max:
            raise ValueError(
                f"need beta_min < beta_max, got [{self.beta_min}, {self.beta_max}]"
            )
        if self.grid_points < 3:
            raise ValueError(f"grid_points must be >= 3, got {self.grid_points}")
        if self.refine_tolerance <= 0 or self.derivative_step <= 0:
            raise ValueError("tolerances must be positive")

    @property
    def grid_step(self) -> float:
        return (self.beta_max - self.beta_min) / (self.grid_points - 1)


def welfare_of_beta(
    dist: GroupedDistribution,
    params: WelfareParams,
    factors: Sequence[float],
    beta: float,
) -> float:
    """Total welfare of the allocation ``dist`` receives at ``beta``."""
    allocation = allocate_income(dist, factors, beta)
    return total_welfare(allocation.incomes, dist.weights, params)


def _welfare_any_beta(
    dist: GroupedDistribution,
    params: WelfareParams,
    factors: Sequence[float],
    beta: float,
) -> float:
    # Same composition as welfare_of_beta but without the beta >= 0 gate,
    # so central differences can straddle beta = 0.
    probs = _softmax(factors, beta)
    total = dist.total_income
    return total_welfare([total * p for p in probs], dist.weights, params)


def sweep_welfare(
    dist: GroupedDistribution,
    params: WelfareParams,
    factors: Sequence[float],
    config: SearchConfig | None = None,
) -> tuple[tuple[float, float], ...]:
    """Welfare on the uniform beta grid, ordered by ascending beta."""
    config = config or SearchConfig()
    n = config.grid_points
    span = config.beta_max - config.beta_min
    betas = [config.beta_min + span * k / (n - 1) for k in range(n)]
    betas[0], betas[-1] = config.beta_min, config.beta_max
    return tuple((b, welfare_of_beta(dist, params, factors, b)) for b in betas)


def _golden_section_max(
    func: Callable[[float], float], lo: float, hi: float, tol: float
) -> tuple[float, float]:
    # Maximize func on [lo, hi]; ties move the bracket left, so a flat
    # objective collapses onto lo.
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = func(c), func(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = func(d)
    mid = (a + b) / 2
    return mid, func(mid)


def derivative_check(
    dist: GroupedDistribution,
    params: WelfareParams,
    factors: Sequence[float],
    beta_star: float,
    step: float = 1e-4,
) -> float:
    """Central finite-difference dW/dbeta at ``beta_star``.

    Near zero at a true interior maximizer; positive where welfare still
    rises (e.g. at beta = 0 for rising curves).
    """
    up = _welfare_any_beta(dist, params, factors, beta_star + step)
    down = _welfare_any_beta(dist, params, factors, beta_star - step)
    return (up - down) / (2.0 * step)


def maximize_welfare(
    dist: GroupedDistribution,
    params: WelfareParams,
    factors: Sequence[float],
    config: SearchConfig | None = None,
) -> OptimizationResult:
    """Find beta maximizing total welfare on the configured interval.

    Grid scan picks the best cell; golden-section refines inside the
    bracketing grid interval to ``refine_tolerance``. Welfare ties are
    broken toward the smallest beta. Raises BoundaryMaximumError when the
    optimum lands within one grid step of ``beta_max``, which means the
    interval truncated the search.
    """
    config = config or SearchConfig()
    sweep = sweep_welfare(dist, params, factors, config)

    best_k = 0
    for k, (_, w) in enumerate(sweep):
        if w > sweep[best_k][1]:
            best_k = k
    grid_beta, grid_welfare = sweep[best_k]

    lo = sweep[best_k - 1][0] if best_k > 0 else sweep[0][0]
    hi = sweep[best_k + 1][0] if best_k < len(sweep) - 1 else sweep[-1][0]
    refined_beta, refined_welfare = _golden_section_max(
        lambda b: welfare_of_beta(dist, params, factors, b),
        lo,
        hi,
        config.refine_tolerance,
    )

    if refined_welfare > grid_welfare or (
        refined_welfare == grid_welfare and refined_beta < grid_beta
    ):
        beta_star, welfare_star = refined_beta, refined_welfare
    else:
        beta_star, welfare_star = grid_beta, grid_welfare

    if beta_star >= config.beta_max - config.grid_step:
        raise BoundaryMaximumError(
            f"maximum at beta = {beta_star:.6g} abuts beta_max = "
            f"{config.beta_max:.6g}; widen the search interval"
        )

    derivative = derivative_check(
        dist, params, factors, beta_star, config.derivative_step
    )
    return OptimizationResult(
        beta_star=beta_star,
        welfare_star=welfare_star,
        optimal_allocation=allocate_income(dist, factors, beta_star),
        sweep=sweep,
        derivative_at_star=derivative,
    )
