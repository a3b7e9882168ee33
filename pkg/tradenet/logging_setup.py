"""Logging configuration for tradenet.

Commands stay quiet unless ``-v``/``-vv`` or TRADENET_LOG_LEVEL asks for
diagnostics. Log lines go to stderr so stdout carries data only.
"""

import logging
import os
from typing import Optional

from tradenet.constants import ENV_TRADENET_LOG_LEVEL, ENV_TRADENET_VERBOSE_DEPS

LEVEL_NAMES = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

# Third-party loggers silenced unless TRADENET_VERBOSE_DEPS is set
_DEPENDENCY_LOGGERS = ("concurrent.futures", "networkx", "scipy")

# Subpackage -> color category; an explicit ``extra={"category": ...}`` wins
_PACKAGE_CATEGORIES = {
    "tradenet.centrality": "solver",
    "tradenet.stats": "study",
    "tradenet.pipeline": "study",
    "tradenet.io": "io",
    "tradenet.configuration": "config",
    "tradenet.utils.perf_logger": "perf",
}


def resolve_level(level: Optional[str] = None) -> int:
    """
    Pick the effective level: argument, then TRADENET_LOG_LEVEL, then CRITICAL.

    Unknown names fall back to CRITICAL.
    """
    name = (level or "").strip().upper() or os.environ.get(ENV_TRADENET_LOG_LEVEL, "").strip().upper()
    if name not in LEVEL_NAMES:
        name = "CRITICAL"
    return getattr(logging, name)


def configure_logging(level: Optional[str] = None) -> None:
    """Install one stderr handler on the root logger at the resolved level."""
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)

    resolved = resolve_level(level)
    root_logger.setLevel(resolved)

    handler = logging.StreamHandler()
    handler.setLevel(resolved)
    handler.setFormatter(_CategoryFormatter(enable_color=_supports_color()))
    root_logger.addHandler(handler)

    if os.environ.get(ENV_TRADENET_VERBOSE_DEPS, "").lower() in {"1", "true", "yes"}:
        return
    for name in _DEPENDENCY_LOGGERS:
        dependency = logging.getLogger(name)
        dependency.setLevel(logging.CRITICAL)
        dependency.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Convenience to create module loggers with consistent naming."""
    return logging.getLogger(name)


def category_of(record: logging.LogRecord) -> Optional[str]:
    """Color category of a record: its ``category`` extra, else its subpackage."""
    explicit = getattr(record, "category", None)
    if explicit:
        return explicit
    name = record.name or ""
    for prefix, category in _PACKAGE_CATEGORIES.items():
        if name == prefix or name.startswith(prefix + "."):
            return category
    return None


def _supports_color() -> bool:
    try:
        return os.isatty(2)
    except Exception:
        return False


class _CategoryFormatter(logging.Formatter):
    """Tab-aligned log lines, colored by category on a terminal."""

    # Tabs for alignment; logger name with line number: tradenet.centrality.eigenvector:88
    FORMAT = "[%(levelname)s]\t%(asctime)s.%(msecs)03d\t%(name)s:%(lineno)d\t%(message)s"
    DATE_FORMAT = "%H:%M:%S"
    RESET = "\x1b[0m"
    COLORS = {
        "perf": "\x1b[38;5;39m",
        "solver": "\x1b[38;5;129m",
        "io": "\x1b[38;5;208m",
        "study": "\x1b[38;5;117m",
        "config": "\x1b[38;5;220m",
        "level.WARNING": "\x1b[38;5;214m",
        "level.ERROR": "\x1b[38;5;196m",
        "level.CRITICAL": "\x1b[48;5;196;38;5;231m",
    }
    DEFAULT_COLOR = "\x1b[38;5;245m"

    def __init__(self, enable_color: bool = True):
        super().__init__(fmt=self.FORMAT, datefmt=self.DATE_FORMAT)
        self.enable_color = enable_color

    def format(self, record: logging.LogRecord) -> str:
        base = super().format(record)
        if not self.enable_color:
            return base
        # Warnings and errors keep their level color whatever the category
        if record.levelno >= logging.WARNING:
            color = self.COLORS.get(f"level.{record.levelname}", self.DEFAULT_COLOR)
        else:
            color = self.COLORS.get(category_of(record) or "", self.DEFAULT_COLOR)
        return f"{color}{base}{self.RESET}"
