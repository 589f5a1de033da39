"""Feasible income equality toolkit.

Derives sigmoid welfare parameters from grouped income shares, allocates
income with a softmax (Boltzmann) rule over contribution factors, finds
the welfare-maximizing concentration parameter, and reports optimal
distributions, Lorenz curves and Gini coefficients.
"""

from .allocation import (
    FactorModel,
    allocate_income,
    boltzmann_probabilities,
    income_factors,
)
from .errors import (
    BadWeightsError,
    BoundaryMaximumError,
    DegenerateWidthError,
    DuplicateGroupError,
    FeqError,
    LengthMismatchError,
    MalformedHeaderError,
    MalformedRowError,
    NegativeBetaError,
    NegativeShareError,
    RuleMismatchError,
    TooFewGroupsError,
    UnknownDatasetError,
    ValidationFailedError,
    ZeroTotalIncomeError,
)
from .ingest import (
    builtin_dataset,
    builtin_datasets,
    parse_csv,
    parse_csv_lenient,
)
from .metrics import (
    ComparisonResult,
    ComparisonRow,
    compare_distributions,
    gini,
    lorenz_curve,
)
from .model import (
    BoltzmannAllocation,
    Group,
    GroupedDistribution,
    LorenzCurve,
    OptimizationResult,
    WelfareParams,
    representative_incomes,
    validate_distribution,
)
from .optimizer import (
    SearchConfig,
    derivative_check,
    maximize_welfare,
    sweep_welfare,
    welfare_of_beta,
)
from .report import (
    AnalysisReport,
    analyze_distribution,
    analyze_many,
    emit_datasets_csv,
    emit_json,
    emit_lorenz_csv,
    emit_sweep_csv,
    emit_trend_csv,
    read_lorenz_csv,
    read_sweep_csv,
    read_trend_csv,
    render_text,
    render_text_many,
)
from .welfare import (
    WelfareDerivationRule,
    derive_welfare_params,
    sigmoid_utility,
    sigmoid_utility_slope,
    total_welfare,
)

__version__ = "0.1.0"
