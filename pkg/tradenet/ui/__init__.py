"""Terminal output: error lines, status messages and tab-separated tables."""

from tradenet.ui.formatting import (
    average_table,
    class_table,
    percent,
    print_configuration_summary,
    rate_cell,
    rate_table,
    study_rows_table,
    tendency_average_table,
)
from tradenet.ui.output import PLAIN_MODE, console, data, error, info, success, warn

__all__ = [
    # Output functions
    "console",
    "PLAIN_MODE",
    "data",
    "error",
    "info",
    "success",
    "warn",
    # Formatting functions
    "average_table",
    "class_table",
    "percent",
    "print_configuration_summary",
    "rate_cell",
    "rate_table",
    "study_rows_table",
    "tendency_average_table",
]
