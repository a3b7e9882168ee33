"""Centralized defaults and constants for tradenet.

Keep all cross-module default values here to avoid duplication.
"""

# ============================================================================
# Solver Defaults
# ============================================================================

DEFAULT_TOLERANCE = 1e-12  # L1 change per power-iteration sweep
DEFAULT_MAX_ITERATIONS = 100_000
DEFAULT_DANGLING_POLICY = "error"

DANGLING_POLICIES = ("error", "uniform")

# Tolerances used when validating solver inputs and outputs
ADJACENCY_SUM_TOLERANCE = 1e-12
MARKOV_COLUMN_TOLERANCE = 1e-12
STATIONARY_RESIDUAL_TOLERANCE = 1e-10

# ============================================================================
# Study Defaults
# ============================================================================

DEFAULT_ALPHA = 0.05
DEFAULT_COMPARE_RULE = "abs"
DEFAULT_MIN_YEARS = 3
MIN_SAMPLES = 3  # Pearson needs n - 2 >= 1 degrees of freedom

# A series whose spread is below this fraction of its magnitude counts as constant
ZERO_VARIANCE_RELATIVE_SPREAD = 1e-12

COMPARE_RULES = ("abs", "signed")

# |r_in| and |r_out| closer than this count as a tie (tie goes to "in")
CLASSIFY_TIE_TOLERANCE = 1e-12

# Continued fraction for the regularized incomplete beta
BETACF_MAX_ITERATIONS = 10_000
BETACF_EPSILON = 1e-15
BETACF_FPMIN = 1e-300

# ============================================================================
# Measures and Directions
# ============================================================================

MEASURES = ("degree", "eigenvector", "randomwalk")
DIRECTIONS = ("in", "out")

# ============================================================================
# Input / Output
# ============================================================================

TRADE_LONG_HEADER = ("year", "exporter", "importer", "value")
SERIES_HEADER = ("country", "year", "value")
GROUPS_HEADER = ("country", "group")
INOUT_FIXTURE_HEADER = ("country", "correlation", "p", "group")
GDP_FIXTURE_HEADER = ("country", "in_r", "in_p", "out_r", "out_p", "group")
GDP_REPORT_HEADER = ("country", "in_r", "in_p", "out_r", "out_p", "class", "group")
INOUT_REPORT_HEADER = ("country", "r", "p", "group")
WIDE_CORNER_LABELS = ("", "exporter")

OUTPUT_FORMATS = ("csv", "json")
REPORT_SCHEMA_VERSION = 1

# ============================================================================
# Exit Codes
# ============================================================================

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NO_CONVERGENCE = 3

# ============================================================================
# Environment Variables
# ============================================================================

ENV_TRADENET_THREADS = "TRADENET_THREADS"
ENV_TRADENET_LOG_LEVEL = "TRADENET_LOG_LEVEL"
ENV_TRADENET_VERBOSE_DEPS = "TRADENET_VERBOSE_DEPS"
ENV_TRADENET_PLAIN = "TRADENET_PLAIN"

# ============================================================================
# Runtime
# ============================================================================

DEFAULT_MAX_THREADS = 8

# ============================================================================
# Configuration
# ============================================================================

CONFIG_DIR_NAME = "tradenet"
CONFIG_FILENAME = "config.toml"

# ============================================================================
# UI Styling
# ============================================================================

UI_TEXT_STYLE_WARNING = "yellow"
UI_BORDER_COLOR_OUTPUT = "green"
