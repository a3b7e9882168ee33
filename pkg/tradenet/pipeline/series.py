"""Per-country time series: yearly centralities, weighted GDP, income groups."""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from tradenet.centrality import CentralityVector, Direction, Measure, SolverOptions, compute_centrality
from tradenet.errors import (
    DuplicateYear,
    EmptyInput,
    IndexMismatch,
    MissingValue,
    MissingYearValue,
    NonPositiveGDP,
    TradenetError,
)
from tradenet.logging_setup import get_logger
from tradenet.network import AdjacencyMatrix, CountryIndex
from tradenet.stats import GroupAssignment
from tradenet.utils import parallel_map

logger = get_logger(__name__)

Point = Tuple[int, float]
Panel = Dict[str, "CountrySeries"]


@dataclass(frozen=True)
class CountrySeries:
    """One quantity for one country, keyed by strictly increasing years."""

    country: str
    quantity: str
    points: Tuple[Point, ...]

    def __post_init__(self) -> None:
        points = tuple((int(year), float(value)) for year, value in self.points)
        object.__setattr__(self, "points", points)
        for (y0, _), (y1, _) in zip(points, points[1:]):
            if y1 <= y0:
                raise DuplicateYear(
                    f"{self.country}: years must be strictly increasing ({y0} then {y1})"
                )
        for year, value in points:
            if not math.isfinite(value):
                raise MissingValue(f"{self.country}: non-finite {self.quantity} in {year}")

    @classmethod
    def from_mapping(cls, country: str, quantity: str, values: Mapping[int, float]) -> "CountrySeries":
        """Build a series from a year -> value mapping, sorting the years."""
        return cls(country, quantity, tuple(sorted(values.items())))

    @property
    def years(self) -> List[int]:
        return [year for year, _ in self.points]

    @property
    def values(self) -> List[float]:
        return [value for _, value in self.points]

    def as_dict(self) -> Dict[int, float]:
        return dict(self.points)

    def __len__(self) -> int:
        return len(self.points)


def aligned(first: CountrySeries, second: CountrySeries) -> Tuple[List[int], List[float], List[float]]:
    """
    Values of both series on the years they share.

    Args:
        first: One country series.
        second: Another series, usually of the same country.

    Returns:
        The shared years in increasing order and the two value lists on them.
    """
    a, b = first.as_dict(), second.as_dict()
    years = sorted(a.keys() & b.keys())
    return years, [a[y] for y in years], [b[y] for y in years]


# ============================================================================
# Weighted GDP
# ============================================================================


def weighted_gdp(
    gdp_panel: Mapping[str, CountrySeries],
    index: Optional[CountryIndex] = None,
    years: Optional[Iterable[int]] = None,
) -> Panel:
    """
    Divide each country's GDP by the total over the indexed countries, year by year.

    Only countries in ``index`` (all panel countries when omitted) enter the
    total. Years default to every year any of those countries reports.

    Args:
        gdp_panel: Raw GDP series by country.
        index: Countries entering the total.
        years: Years to weight.

    Returns:
        One ``weighted_gdp`` series per indexed country; shares sum to 1 each year.

    Raises:
        MissingYearValue: If a country lacks a year that is used.
        NonPositiveGDP: If a used GDP value is <= 0.
    """
    countries = list(index.names) if index is not None else list(gdp_panel.keys())
    tables = {}
    for country in countries:
        series = gdp_panel.get(country)
        if series is None:
            raise MissingYearValue(f"No GDP series for {country}")
        tables[country] = series.as_dict()

    if years is None:
        used = sorted({year for table in tables.values() for year in table})
    else:
        used = sorted(set(years))

    shares: Dict[str, Dict[int, float]] = {c: {} for c in countries}
    for year in used:
        values = []
        for country in countries:
            if year not in tables[country]:
                raise MissingYearValue(f"No GDP value for {country} in {year}")
            value = tables[country][year]
            if value <= 0:
                raise NonPositiveGDP(f"GDP of {country} in {year} must be positive, got {value!r}")
            values.append(value)
        total = math.fsum(values)
        for country, value in zip(countries, values):
            shares[country][year] = value / total

    return {c: CountrySeries.from_mapping(c, "weighted_gdp", shares[c]) for c in countries}


# ============================================================================
# Income groups
# ============================================================================


def assign_groups(per_capita: Mapping[str, float], index: CountryIndex) -> GroupAssignment:
    """
    Split countries into halves by per-capita income.

    The top ceil(n/2) by descending value form group 1; equal values are
    ordered by label.

    Args:
        per_capita: Per-capita income by country for the reference year.
        index: Countries to assign.

    Returns:
        Group 1 or 2 for every country of the index.

    Raises:
        MissingValue: If a country of the index has no finite per-capita value.
    """
    missing = [c for c in index.names if c not in per_capita or not math.isfinite(per_capita[c])]
    if missing:
        raise MissingValue(f"No per-capita value for: {', '.join(missing)}")

    ranked = sorted(index.names, key=lambda c: (-per_capita[c], c))
    cutoff = math.ceil(len(ranked) / 2)
    top = set(ranked[:cutoff])
    groups = {c: (1 if c in top else 2) for c in index.names}
    logger.info("Assigned %d countries to group 1 and %d to group 2", cutoff, len(ranked) - cutoff)
    return GroupAssignment(groups)


# ============================================================================
# Centrality series
# ============================================================================


def _check_yearly(yearly: Sequence[AdjacencyMatrix]) -> List[AdjacencyMatrix]:
    if not yearly:
        raise EmptyInput("No yearly networks given")
    index = yearly[0].countries
    seen = set()
    for a in yearly:
        if a.countries != index:
            raise IndexMismatch(f"Network for {a.year} uses a different country index than {yearly[0].year}")
        if a.year in seen:
            raise DuplicateYear(f"Two networks given for {a.year}")
        seen.add(a.year)
    return sorted(yearly, key=lambda a: a.year)


def centrality_vectors(
    yearly: Sequence[AdjacencyMatrix],
    measure: Measure,
    direction: Direction,
    opts: SolverOptions = SolverOptions(),
    threads: int = 1,
) -> List[CentralityVector]:
    """
    One centrality vector per year, in year order.

    Args:
        yearly: Normalized networks over one country index, one per year.
        measure: Centrality measure to compute.
        direction: ``in`` or ``out``.
        opts: Solver tolerance, iteration cap and dangling policy.
        threads: Worker threads for the per-year solves.

    Returns:
        The vectors sorted by year.

    Raises:
        EmptyInput: If no networks are given.
        IndexMismatch: If the networks use different country indexes.
        DuplicateYear: If two networks share a year.
        TradenetError: A solver failure, tagged with its year.
    """
    ordered = _check_yearly(yearly)

    def solve(a: AdjacencyMatrix) -> CentralityVector:
        try:
            return compute_centrality(a, measure, direction, opts)
        except TradenetError as exc:
            raise exc.with_year(a.year)

    return parallel_map(solve, ordered, threads)


def centrality_series(
    yearly: Sequence[AdjacencyMatrix],
    measure: Measure,
    direction: Direction,
    opts: SolverOptions = SolverOptions(),
    threads: int = 1,
) -> Panel:
    """
    Per-country series of a centrality measure across the given years.

    Takes the same arguments as centrality_vectors().

    Returns:
        A ``<measure>_<direction>`` series for every country of the index.
    """
    vectors = centrality_vectors(yearly, measure, direction, opts, threads)
    index = vectors[0].countries
    quantity = f"{measure}_{direction}"
    return {
        country: CountrySeries(
            country, quantity, tuple((v.year, float(v.values[i])) for v in vectors)
        )
        for i, country in enumerate(index.names)
    }
