"""Dataset manifest: one YAML file naming every input of a study."""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml

from tradenet.errors import ManifestError
from tradenet.io.csvfile import PathLike
from tradenet.logging_setup import get_logger

logger = get_logger(__name__)

_KNOWN_KEYS = {"trade", "gdp", "per_capita", "groups", "reference_year", "years"}


@dataclass(frozen=True)
class DatasetManifest:
    """Resolved input paths plus the year window of a study."""

    trade: Path
    gdp: Optional[Path] = None
    per_capita: Optional[Path] = None
    groups: Optional[Path] = None
    reference_year: Optional[int] = None
    years: Optional[Tuple[int, int]] = None

    def __post_init__(self) -> None:
        for name in ("trade", "gdp", "per_capita", "groups"):
            value = getattr(self, name)
            if value is not None and not Path(value).exists():
                raise ManifestError(f"Manifest entry '{name}' points to missing {value}")
        if self.years is not None and self.years[0] > self.years[1]:
            raise ManifestError(f"Manifest year range {self.years[0]}..{self.years[1]} is empty")
        if self.per_capita is not None and self.groups is None and self.reference_year is None:
            raise ManifestError("Manifest 'per_capita' needs a 'reference_year'")

    @classmethod
    def from_dict(cls, data: Dict[str, Any], base: Path) -> "DatasetManifest":
        unknown = set(data) - _KNOWN_KEYS
        if unknown:
            raise ManifestError(f"Unknown manifest keys: {', '.join(sorted(unknown))}")
        if "trade" not in data:
            raise ManifestError("Manifest must name a 'trade' source")

        def resolve(key: str) -> Optional[Path]:
            value = data.get(key)
            if value is None:
                return None
            if not isinstance(value, str) or not value.strip():
                raise ManifestError(f"Manifest entry '{key}' must be a path")
            path = Path(value)
            return path if path.is_absolute() else base / path

        years = data.get("years")
        if years is not None:
            if (
                not isinstance(years, list)
                or len(years) != 2
                or not all(isinstance(y, int) and not isinstance(y, bool) for y in years)
            ):
                raise ManifestError("Manifest 'years' must be [first, last]")
            years = (years[0], years[1])

        reference_year = data.get("reference_year")
        if reference_year is not None and (isinstance(reference_year, bool) or not isinstance(reference_year, int)):
            raise ManifestError("Manifest 'reference_year' must be an integer")

        return cls(
            trade=resolve("trade"),  # type: ignore[arg-type]
            gdp=resolve("gdp"),
            per_capita=resolve("per_capita"),
            groups=resolve("groups"),
            reference_year=reference_year,
            years=years,
        )

    @classmethod
    def from_file(cls, path: PathLike) -> "DatasetManifest":
        """Load a manifest; relative paths resolve against its directory."""
        path = Path(path)
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except OSError as exc:
            raise ManifestError(f"Cannot read manifest {path}: {exc.strerror or exc}") from None
        except yaml.YAMLError as exc:
            raise ManifestError(f"Manifest {path} is not valid YAML: {exc}") from None
        if not isinstance(data, dict):
            raise ManifestError(f"Manifest {path} must be a mapping")
        logger.debug("Loaded manifest %s", path, extra={"category": "config"})
        return cls.from_dict(data, path.parent)
