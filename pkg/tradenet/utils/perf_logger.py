"""Stage timing for long-running study and centrality commands."""

import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

from tradenet.logging_setup import get_logger

logger = get_logger(__name__)


def format_ms(ms: float) -> str:
    """
    Format milliseconds with thousands separators.

    Args:
        ms: Duration in milliseconds.

    Returns:
        The duration with three decimals, e.g. ``1,234.567``.
    """
    return f"{ms:,.3f}"


def _level(name: str) -> int:
    level = logging.getLevelName(name.upper())
    return level if isinstance(level, int) else logging.INFO


class PerformanceLogger:
    """
    Tracks elapsed time per section and since the start of a stage.

    Usage:
        perf = PerformanceLogger("Study")
        perf.start()
        perf.log_section("Centrality series", {"years": 31})
        with perf.section("Correlations"):
            ...
        perf.log_complete({"countries": 71})
    """

    def __init__(self, stage_name: str):
        """
        Args:
            stage_name: Prefix for every record, e.g. "Study" or "Centrality".
        """
        self.stage_name = stage_name
        self.start_time: Optional[float] = None
        self.last_section_time: Optional[float] = None
        self.section_count = 0

    def start(self) -> "PerformanceLogger":
        """
        Start timing. Must be called before logging any sections.

        Returns:
            The logger itself, so construction and start can be chained.
        """
        self.start_time = time.perf_counter()
        self.last_section_time = self.start_time
        self.section_count = 0
        return self

    def _require_started(self, caller: str) -> None:
        if self.start_time is None:
            raise RuntimeError(f"PerformanceLogger.start() must be called before {caller}()")

    def log_section(
        self,
        section_name: str,
        extra_info: Optional[Dict[str, Any]] = None,
        level: str = "info",
    ) -> None:
        """
        Log the time since the previous section and since start.

        Args:
            section_name: Label of the finished section.
            extra_info: Key/value pairs appended to the record.
            level: Logging level name; unknown names fall back to INFO.

        Raises:
            RuntimeError: If start() has not been called.
        """
        self._require_started("log_section")

        # No timing and no state updates when the record would be dropped
        log_level = _level(level)
        if not logger.isEnabledFor(log_level):
            return

        now = time.perf_counter()
        elapsed_ms = (now - self.last_section_time) * 1000
        total_ms = (now - self.start_time) * 1000
        self.last_section_time = now
        self.section_count += 1

        msg = f"[{self.stage_name}] {section_name}: {format_ms(elapsed_ms)} ms (total: {format_ms(total_ms)} ms)"
        self._emit(log_level, msg, extra_info)

    @contextmanager
    def section(self, section_name: str, extra_info: Optional[Dict[str, Any]] = None) -> Iterator[None]:
        """
        Time a block and log it as one section when the block exits.

        Args:
            section_name: Label of the block.
            extra_info: Key/value pairs appended to the record.
        """
        self._require_started("section")
        self.last_section_time = time.perf_counter()
        yield
        self.log_section(section_name, extra_info)

    def log_complete(self, extra_info: Optional[Dict[str, Any]] = None, level: str = "info") -> None:
        """
        Log completion of the entire stage with the section count.

        Args:
            extra_info: Key/value pairs appended to the record.
            level: Logging level name; unknown names fall back to INFO.
        """
        self._require_started("log_complete")

        log_level = _level(level)
        if not logger.isEnabledFor(log_level):
            return

        total_ms = (time.perf_counter() - self.start_time) * 1000
        msg = f"[{self.stage_name}] Complete: (total: {format_ms(total_ms)} ms, sections: {self.section_count})"
        self._emit(log_level, msg, extra_info)

    @staticmethod
    def _emit(log_level: int, msg: str, extra_info: Optional[Dict[str, Any]]) -> None:
        if extra_info:
            extra_str = ", ".join(f"{k}={v}" for k, v in extra_info.items())
            msg = f"{msg} ({extra_str})"
        logger.log(log_level, msg, extra={"category": "perf"})
