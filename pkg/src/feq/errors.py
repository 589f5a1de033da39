"""Exception hierarchy for the feq package.

Every failure the library raises on purpose derives from :class:`FeqError`,
so callers (and the CLI) can catch one type for "bad input or bad state"
and let genuine bugs propagate.
"""


class FeqError(Exception):
    """Base class for all feq errors."""


# -- distribution validation ------------------------------------------------

class NegativeShareError(FeqError):
    """An income share is negative."""


class BadWeightsError(FeqError):
    """Population weights are non-positive or do not sum to 1."""


class TooFewGroupsError(FeqError):
    """A grouped distribution needs at least 2 groups."""


# -- welfare parameters -----------------------------------------------------

class RuleMismatchError(FeqError):
    """The quintile derivation rule was applied to non-quintile data."""


class DegenerateWidthError(FeqError):
    """Critical low and high incomes do not satisfy 0 < low < high."""


# -- allocation and optimization --------------------------------------------

class LengthMismatchError(FeqError):
    """Two parallel sequences differ in length."""


class NegativeBetaError(FeqError):
    """The concentration parameter beta must be >= 0."""


class BoundaryMaximumError(FeqError):
    """The welfare maximum sits at the top of the search interval.

    Widen ``beta_max``; the reported optimum would otherwise be an artifact
    of the interval, not a true interior maximum.
    """


# -- metrics ----------------------------------------------------------------

class ZeroTotalIncomeError(FeqError):
    """All income shares are zero; a Lorenz curve is undefined."""


# -- dataset ingestion ------------------------------------------------------

class MalformedHeaderError(FeqError):
    """The CSV header row is missing or wrong."""


class MalformedRowError(FeqError):
    """A CSV data row cannot be parsed."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DuplicateGroupError(FeqError):
    """The same (label, year, group_index) appears twice."""


class ValidationFailedError(FeqError):
    """A parsed dataset failed semantic validation."""


class UnknownDatasetError(FeqError):
    """No built-in dataset matches the requested name."""
