"""Flag resolution and error reporting shared by tradenet commands."""

from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Optional

import typer

from tradenet import ui
from tradenet.centrality import SolverOptions, check_direction, check_measure
from tradenet.configuration import ConfigExistsError, InvalidConfigError, TradenetConfig, load_config
from tradenet.constants import (
    COMPARE_RULES,
    DANGLING_POLICIES,
    EXIT_USAGE,
    MIN_SAMPLES,
    OUTPUT_FORMATS,
)
from tradenet.errors import TradenetError
from tradenet.io import DatasetManifest
from tradenet.logging_setup import get_logger
from tradenet.utils import InvalidThreadCount, resolve_threads

logger = get_logger(__name__)


class UsageError(ValueError):
    """Raised when flags are missing, conflicting or out of range."""

    code = "USAGE"


@contextmanager
def exit_on_error() -> Iterator[None]:
    """
    Turn library exceptions into one ``error[<CODE>]:`` line and an exit code.

    Data errors exit 2 (3 for non-convergence); usage and config errors exit 1.
    """
    try:
        yield
    except TradenetError as exc:
        logger.debug("Command failed", exc_info=True)
        ui.error(exc.code, str(exc))
        raise typer.Exit(exc.exit_code)
    except (InvalidConfigError, ConfigExistsError, InvalidThreadCount) as exc:
        ui.error(getattr(exc, "code", "USAGE"), str(exc))
        raise typer.Exit(EXIT_USAGE)
    except ValueError as exc:
        ui.error("USAGE", str(exc))
        raise typer.Exit(EXIT_USAGE)


def settings() -> TradenetConfig:
    """The user's config file, or defaults when there is none."""
    return load_config()


def parse_country_list(raw: str) -> List[str]:
    """Split ``"Brazil, Russia,India"`` into labels; blanks are dropped."""
    countries = [part.strip() for part in raw.split(",") if part.strip()]
    if not countries:
        raise UsageError("--countries needs at least one country label")
    duplicates = sorted({c for c in countries if countries.count(c) > 1})
    if duplicates:
        raise UsageError(f"--countries repeats {', '.join(duplicates)}")
    return countries


def check_format(fmt: str) -> str:
    if fmt not in OUTPUT_FORMATS:
        raise UsageError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}, got {fmt!r}")
    return fmt


def solver_options(
    config: TradenetConfig,
    tol: Optional[float],
    max_iter: Optional[int],
    dangling: Optional[str],
) -> SolverOptions:
    """Flags win over the config file."""
    if dangling is not None and dangling not in DANGLING_POLICIES:
        raise UsageError(f"--dangling must be one of {', '.join(DANGLING_POLICIES)}, got {dangling!r}")
    return SolverOptions(
        tolerance=tol if tol is not None else config.solver.tolerance,
        max_iterations=max_iter if max_iter is not None else config.solver.max_iterations,
        dangling_policy=dangling if dangling is not None else config.solver.dangling,  # type: ignore[arg-type]
    )


def thread_count(config: TradenetConfig, threads: Optional[int]) -> int:
    """--threads > TRADENET_THREADS > config > automatic."""
    if threads is not None and threads < 1:
        raise UsageError(f"--threads must be a positive integer, got {threads}")
    return resolve_threads(threads, config.runtime.threads)


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs of one ``tradenet study`` run."""

    kind: str
    measure: str
    trade: Path
    gdp: Optional[Path]
    groups: Optional[Path]
    per_capita: Optional[Path]
    reference_year: Optional[int]
    start_year: Optional[int]
    end_year: Optional[int]
    alpha: float
    compare: str
    min_years: int
    solver: SolverOptions
    threads: int
    out: Optional[Path]
    fmt: str
    stamp: Optional[str]

    def __post_init__(self) -> None:
        check_measure(self.measure)
        check_format(self.fmt)
        if not (0 < self.alpha < 1):
            raise UsageError(f"--alpha must lie strictly between 0 and 1, got {self.alpha!r}")
        if self.compare not in COMPARE_RULES:
            raise UsageError(f"--compare must be one of {', '.join(COMPARE_RULES)}, got {self.compare!r}")
        if self.min_years < MIN_SAMPLES:
            raise UsageError(f"--min-years must be at least {MIN_SAMPLES}, got {self.min_years}")
        if self.kind == "gdp" and self.gdp is None:
            raise UsageError("study gdp needs --gdp")
        if self.groups is not None and self.per_capita is not None:
            raise UsageError("--groups and --per-capita are mutually exclusive")
        if self.per_capita is not None and self.reference_year is None:
            raise UsageError("--per-capita needs --reference-year")
        if self.start_year is not None and self.end_year is not None and self.start_year > self.end_year:
            raise UsageError(f"--start-year {self.start_year} is after --end-year {self.end_year}")

    def in_window(self, year: int) -> bool:
        if self.start_year is not None and year < self.start_year:
            return False
        return self.end_year is None or year <= self.end_year

    @classmethod
    def from_flags(
        cls,
        kind: str,
        *,
        config: TradenetConfig,
        manifest: Optional[Path],
        trade: Optional[Path],
        gdp: Optional[Path],
        measure: str,
        groups: Optional[Path],
        per_capita: Optional[Path],
        reference_year: Optional[int],
        start_year: Optional[int],
        end_year: Optional[int],
        alpha: Optional[float],
        compare: Optional[str],
        min_years: Optional[int],
        tol: Optional[float],
        max_iter: Optional[int],
        dangling: Optional[str],
        threads: Optional[int],
        out: Optional[Path],
        fmt: str,
        stamp: Optional[str],
    ) -> "RunConfig":
        """
        Merge flags, the optional manifest and the config file.

        Explicit flags override manifest entries, which override config defaults.
        """
        loaded = DatasetManifest.from_file(manifest) if manifest is not None else None
        if loaded is not None:
            trade = trade or loaded.trade
            gdp = gdp or loaded.gdp
            # A flag for either grouping source replaces the manifest's choice
            if groups is None and per_capita is None:
                groups = loaded.groups
                per_capita = loaded.per_capita if loaded.groups is None else None
            if reference_year is None:
                reference_year = loaded.reference_year
            if loaded.years is not None:
                start_year = start_year if start_year is not None else loaded.years[0]
                end_year = end_year if end_year is not None else loaded.years[1]
        if trade is None:
            raise UsageError("--trade is required (or a --manifest naming it)")
        return cls(
            kind=kind,
            measure=measure,
            trade=trade,
            gdp=gdp,
            groups=groups,
            per_capita=per_capita,
            reference_year=reference_year,
            start_year=start_year,
            end_year=end_year,
            alpha=alpha if alpha is not None else config.study.alpha,
            compare=compare if compare is not None else config.study.compare,
            min_years=min_years if min_years is not None else config.study.min_years,
            solver=solver_options(config, tol, max_iter, dangling),
            threads=thread_count(config, threads),
            out=out,
            fmt=fmt,
            stamp=stamp,
        )


def check_centrality_flags(measure: str, direction: str, year: Optional[int], all_years: bool) -> None:
    check_measure(measure)
    check_direction(direction)
    if year is not None and all_years:
        raise UsageError("--year and --all-years are mutually exclusive")
