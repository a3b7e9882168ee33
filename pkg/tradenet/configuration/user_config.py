"""User configuration management for tradenet."""

import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

# Use tomllib for Python 3.11+, tomli for older versions
if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

import tomli_w

from tradenet.constants import (
    COMPARE_RULES,
    CONFIG_DIR_NAME,
    CONFIG_FILENAME,
    DANGLING_POLICIES,
    DEFAULT_ALPHA,
    DEFAULT_COMPARE_RULE,
    DEFAULT_DANGLING_POLICY,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_MIN_YEARS,
    DEFAULT_TOLERANCE,
    MIN_SAMPLES,
)
from tradenet.logging_setup import get_logger

logger = get_logger(__name__)


class InvalidConfigError(ValueError):
    """Raised when the configuration file holds invalid values."""

    code = "INVALID_CONFIG"


class ConfigExistsError(RuntimeError):
    """Raised when writing defaults would overwrite an existing file."""

    code = "CONFIG_EXISTS"


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


# ============================================================================
# Section Dataclasses
# ============================================================================


@dataclass
class SolverConfig:
    """Defaults for the centrality solvers."""

    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    dangling: str = DEFAULT_DANGLING_POLICY

    def __post_init__(self) -> None:
        if not isinstance(self.tolerance, (int, float)) or isinstance(self.tolerance, bool):
            raise InvalidConfigError(f"solver.tolerance must be a number, got {self.tolerance!r}")
        if not (math.isfinite(self.tolerance) and self.tolerance > 0):
            raise InvalidConfigError(f"solver.tolerance must be positive, got {self.tolerance!r}")
        if not _is_int(self.max_iterations) or self.max_iterations < 1:
            raise InvalidConfigError(
                f"solver.max_iterations must be an integer >= 1, got {self.max_iterations!r}"
            )
        if self.dangling not in DANGLING_POLICIES:
            raise InvalidConfigError(
                f"solver.dangling must be one of {', '.join(DANGLING_POLICIES)}, got {self.dangling!r}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tolerance": float(self.tolerance),
            "max_iterations": self.max_iterations,
            "dangling": self.dangling,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SolverConfig":
        return cls(
            tolerance=data.get("tolerance", DEFAULT_TOLERANCE),
            max_iterations=data.get("max_iterations", DEFAULT_MAX_ITERATIONS),
            dangling=data.get("dangling", DEFAULT_DANGLING_POLICY),
        )


@dataclass
class StudyConfig:
    """Defaults for correlation studies."""

    alpha: float = DEFAULT_ALPHA
    compare: str = DEFAULT_COMPARE_RULE
    min_years: int = DEFAULT_MIN_YEARS

    def __post_init__(self) -> None:
        if isinstance(self.alpha, bool) or not isinstance(self.alpha, (int, float)) or not (0 < self.alpha < 1):
            raise InvalidConfigError(f"study.alpha must lie strictly between 0 and 1, got {self.alpha!r}")
        if self.compare not in COMPARE_RULES:
            raise InvalidConfigError(
                f"study.compare must be one of {', '.join(COMPARE_RULES)}, got {self.compare!r}"
            )
        if not _is_int(self.min_years) or self.min_years < MIN_SAMPLES:
            raise InvalidConfigError(
                f"study.min_years must be an integer >= {MIN_SAMPLES}, got {self.min_years!r}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {"alpha": float(self.alpha), "compare": self.compare, "min_years": self.min_years}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StudyConfig":
        return cls(
            alpha=data.get("alpha", DEFAULT_ALPHA),
            compare=data.get("compare", DEFAULT_COMPARE_RULE),
            min_years=data.get("min_years", DEFAULT_MIN_YEARS),
        )


@dataclass
class RuntimeConfig:
    """Parallelism settings. ``threads`` unset means automatic."""

    threads: Optional[int] = None

    def __post_init__(self) -> None:
        if self.threads is not None and (not _is_int(self.threads) or self.threads < 1):
            raise InvalidConfigError(f"runtime.threads must be a positive integer, got {self.threads!r}")

    def to_dict(self) -> Dict[str, Any]:
        # TOML has no null; an unset value is simply omitted
        return {} if self.threads is None else {"threads": self.threads}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RuntimeConfig":
        return cls(threads=data.get("threads"))


# ============================================================================
# Main Configuration Dataclass
# ============================================================================


@dataclass
class TradenetConfig:
    """Main tradenet configuration."""

    solver: SolverConfig = field(default_factory=SolverConfig)
    study: StudyConfig = field(default_factory=StudyConfig)
    runtime: RuntimeConfig = field(default_factory=RuntimeConfig)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for TOML serialization."""
        return {
            "solver": self.solver.to_dict(),
            "study": self.study.to_dict(),
            "runtime": self.runtime.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TradenetConfig":
        unknown = set(data) - {"solver", "study", "runtime"}
        if unknown:
            logger.warning("Ignoring unknown config sections: %s", ", ".join(sorted(unknown)))
        for section in ("solver", "study", "runtime"):
            if not isinstance(data.get(section, {}), dict):
                raise InvalidConfigError(f"[{section}] must be a table")
        return cls(
            solver=SolverConfig.from_dict(data.get("solver", {})),
            study=StudyConfig.from_dict(data.get("study", {})),
            runtime=RuntimeConfig.from_dict(data.get("runtime", {})),
        )

    @classmethod
    def from_file(cls, path: Path) -> "TradenetConfig":
        """Load configuration from a file (TOML format)."""
        try:
            with open(path, "rb") as f:
                data = tomllib.load(f)
        except tomllib.TOMLDecodeError as exc:
            raise InvalidConfigError(f"{path} is not valid TOML: {exc}") from None
        return cls.from_dict(data)

    def to_file(self, path: Path) -> None:
        """Save configuration to a file (TOML format)."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as f:
            tomli_w.dump(self.to_dict(), f)


def get_config_dir() -> Path:
    """Get the tradenet configuration directory."""
    if os.name == "nt":  # Windows
        config_base = Path(
            os.environ.get("APPDATA", Path.home() / "AppData" / "Roaming")
        )
    else:  # Unix-like
        config_base = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config"))

    return config_base / CONFIG_DIR_NAME


def get_config_path() -> Path:
    """Get the path to the configuration file."""
    return (get_config_dir() / CONFIG_FILENAME).resolve()


def load_config(path: Optional[Path] = None) -> TradenetConfig:
    """
    Load configuration from the default path or ``path``.

    A missing file is not an error: built-in defaults are returned.

    Raises:
        InvalidConfigError: If the file holds invalid values.
    """
    config_file = path if path is not None else get_config_path()
    if not config_file.exists():
        logger.debug("No config at %s, using defaults", config_file, extra={"category": "config"})
        return TradenetConfig()

    logger.debug("Configuration loaded from %s", config_file, extra={"category": "config"})
    return TradenetConfig.from_file(config_file)


def save_config(config: TradenetConfig, path: Optional[Path] = None, overwrite: bool = True) -> Path:
    """
    Save configuration to the default path or ``path``.

    Raises:
        ConfigExistsError: If the file exists and ``overwrite`` is False.
    """
    if path is None:
        path = get_config_path()
    if path.exists() and not overwrite:
        raise ConfigExistsError(f"Configuration already exists at {path}")

    config.to_file(path)
    logger.info("Configuration saved to %s", path, extra={"category": "config"})
    return path
