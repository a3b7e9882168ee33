"""Shared utility functions for tradenet."""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from tradenet.constants import DEFAULT_MAX_THREADS, ENV_TRADENET_THREADS
from tradenet.logging_setup import get_logger
from tradenet.utils.perf_logger import PerformanceLogger, format_ms

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class InvalidThreadCount(ValueError):
    """Raised when TRADENET_THREADS is not a positive integer."""

    pass


def threads_from_env() -> Optional[int]:
    """
    Read the TRADENET_THREADS cap.

    Returns:
        The positive integer cap, or None when the variable is unset or blank.

    Raises:
        InvalidThreadCount: If the variable holds anything but a positive integer.
    """
    raw = os.environ.get(ENV_TRADENET_THREADS, "").strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise InvalidThreadCount(
            f"{ENV_TRADENET_THREADS} must be a positive integer, got {raw!r}"
        ) from None
    if value < 1:
        raise InvalidThreadCount(
            f"{ENV_TRADENET_THREADS} must be a positive integer, got {value}"
        )
    return value


def resolve_threads(explicit: Optional[int] = None, configured: Optional[int] = None) -> int:
    """Thread count: explicit > TRADENET_THREADS > config > min(8, cpu_count)."""
    if explicit is not None:
        return max(1, explicit)
    from_env = threads_from_env()
    if from_env is not None:
        return from_env
    if configured is not None:
        return max(1, configured)
    return max(1, min(DEFAULT_MAX_THREADS, os.cpu_count() or 1))


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """
    Apply ``fn`` to every item, possibly on a thread pool.

    Results come back in input order whatever the completion order. If any
    call raises, the exception of the earliest failing item is re-raised.
    """
    work = list(items)
    if threads <= 1 or len(work) <= 1:
        return [fn(item) for item in work]

    workers = min(threads, len(work))
    logger.debug("parallel_map: %d items on %d threads", len(work), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, item) for item in work]
        # Iterating in submission order surfaces the earliest failure first
        return [future.result() for future in futures]


__all__ = [
    "PerformanceLogger",
    "format_ms",
    "InvalidThreadCount",
    "threads_from_env",
    "resolve_threads",
    "parallel_map",
]
