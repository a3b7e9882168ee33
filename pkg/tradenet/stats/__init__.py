"""Correlation tests and group-level aggregation."""

from tradenet.stats.aggregation import (
    CORRELATION_CLASSES,
    GROUPS,
    ComparisonRule,
    CorrelationClass,
    GroupAssignment,
    GroupRate,
    SignificantRate,
    TendencyTable,
    average_rates,
    average_tendency,
    classify,
    significant_rate,
    tendency_counts,
)
from tradenet.stats.correlation import (
    CorrelationResult,
    check_alpha,
    p_value,
    pearson,
    regularized_incomplete_beta,
)

__all__ = [
    "CORRELATION_CLASSES",
    "GROUPS",
    "ComparisonRule",
    "CorrelationClass",
    "CorrelationResult",
    "GroupAssignment",
    "GroupRate",
    "SignificantRate",
    "TendencyTable",
    "average_rates",
    "average_tendency",
    "check_alpha",
    "classify",
    "p_value",
    "pearson",
    "regularized_incomplete_beta",
    "significant_rate",
    "tendency_counts",
]
