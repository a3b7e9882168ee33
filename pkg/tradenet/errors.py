"""Exception hierarchy for tradenet.

Every error carries a machine code (printed by the CLI as ``error[<CODE>]:``)
and the process exit code it maps to. Library code raises; only the CLI exits.
"""

from typing import List, Optional, Sequence

from tradenet.constants import EXIT_DATA, EXIT_NO_CONVERGENCE


class TradenetError(Exception):
    """Base class for all tradenet errors."""

    code = "DATA_ERROR"
    exit_code = EXIT_DATA

    def __init__(self, message: str, *, year: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.year = year

    def with_year(self, year: int) -> "TradenetError":
        """Attach the year whose computation failed (first one wins)."""
        if self.year is None:
            self.year = year
        return self

    def __str__(self) -> str:
        if self.year is not None:
            return f"year {self.year}: {self.message}"
        return self.message


# ============================================================================
# Network construction
# ============================================================================


class UnknownCountry(TradenetError):
    """Raised when a label is not part of the country index."""

    code = "UNKNOWN_COUNTRY"


class DuplicateFlow(TradenetError):
    """Raised when the same (exporter, importer) pair appears twice."""

    code = "DUPLICATE_FLOW"


class SelfLoop(TradenetError):
    """Raised when a country reports positive trade with itself."""

    code = "SELF_LOOP"


class NegativeValue(TradenetError):
    """Raised when a flow value is negative."""

    code = "NEGATIVE_VALUE"


class AllZeroMatrix(TradenetError):
    """Raised when a trade matrix has no positive entry and cannot be normalized."""

    code = "ALL_ZERO_MATRIX"


class IndexMismatch(TradenetError):
    """Raised when matrices that must share a country index do not."""

    code = "INDEX_MISMATCH"


# ============================================================================
# Centrality solvers
# ============================================================================


class NoConvergence(TradenetError):
    """Raised when power iteration exhausts its sweep budget."""

    code = "NO_CONVERGENCE"
    exit_code = EXIT_NO_CONVERGENCE

    def __init__(self, message: str, *, last_iterate=None, last_change: float = float("nan"), iterations: int = 0):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.last_change = last_change
        self.iterations = iterations


class ZeroLimit(TradenetError):
    """Raised when the power-iteration iterate collapses to the zero vector."""

    code = "ZERO_LIMIT"


class DanglingNode(TradenetError):
    """Raised when a transition column is undefined because a degree is zero."""

    code = "DANGLING_NODE"

    def __init__(self, message: str, *, countries: Sequence[str] = ()):
        super().__init__(message)
        self.countries: List[str] = list(countries)


class ReducibleNetwork(TradenetError):
    """Raised when the transition graph is not strongly connected."""

    code = "REDUCIBLE_NETWORK"

    def __init__(self, message: str, *, components: Sequence[Sequence[str]] = ()):
        super().__init__(message)
        self.components: List[List[str]] = [list(c) for c in components]


# ============================================================================
# Statistics
# ============================================================================


class LengthMismatch(TradenetError):
    """Raised when paired series have different lengths."""

    code = "LENGTH_MISMATCH"


class TooFewSamples(TradenetError):
    """Raised when fewer than three paired samples are available."""

    code = "TOO_FEW_SAMPLES"


class ZeroVariance(TradenetError):
    """Raised when a series is constant and correlation is undefined."""

    code = "ZERO_VARIANCE"


class DomainError(TradenetError):
    """Raised when a statistic is outside its mathematical domain."""

    code = "DOMAIN_ERROR"


class MissingGroup(TradenetError):
    """Raised when a country has no group assignment."""

    code = "MISSING_GROUP"


class EmptyInput(TradenetError):
    """Raised when an aggregation receives nothing to aggregate."""

    code = "EMPTY_INPUT"


# ============================================================================
# Panels and studies
# ============================================================================


class MissingYearValue(TradenetError):
    """Raised when a country lacks a value for a year other countries have."""

    code = "MISSING_YEAR_VALUE"


class NonPositiveGDP(TradenetError):
    """Raised when a GDP value is zero or negative."""

    code = "NON_POSITIVE_GDP"


class MissingValue(TradenetError):
    """Raised when a required per-country value is absent."""

    code = "MISSING_VALUE"


class InsufficientYears(TradenetError):
    """Raised when a study has fewer common years than its minimum."""

    code = "INSUFFICIENT_YEARS"


# ============================================================================
# Input / output
# ============================================================================


class MalformedRow(TradenetError):
    """Raised when a CSV row cannot be parsed. Carries the 1-based line number."""

    code = "MALFORMED_ROW"

    def __init__(self, message: str, *, path: Optional[str] = None, line: Optional[int] = None):
        location = ""
        if path is not None and line is not None:
            location = f"{path}:{line}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line


class LabelMismatch(TradenetError):
    """Raised when a wide table's row and column labels differ."""

    code = "LABEL_MISMATCH"


class DuplicateYear(TradenetError):
    """Raised when a country has two values for the same year."""

    code = "DUPLICATE_YEAR"


class NonPositiveValue(TradenetError):
    """Raised when a GDP panel value is zero or negative."""

    code = "NON_POSITIVE_VALUE"


class InvalidGroup(TradenetError):
    """Raised when a group label is not 1 or 2."""

    code = "INVALID_GROUP"


class DuplicateCountry(TradenetError):
    """Raised when a country appears twice where it must be unique."""

    code = "DUPLICATE_COUNTRY"


class IoFailure(TradenetError):
    """Raised when a file cannot be read or written."""

    code = "IO_FAILURE"


class ManifestError(TradenetError):
    """Raised when a dataset manifest is unreadable or inconsistent."""

    code = "MANIFEST_ERROR"
