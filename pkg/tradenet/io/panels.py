"""Country panels: GDP and per-capita series, group files, published-table fixtures."""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Literal, Mapping, Optional, Tuple

from tradenet.constants import (
    DEFAULT_ALPHA,
    GDP_FIXTURE_HEADER,
    GROUPS_HEADER,
    INOUT_FIXTURE_HEADER,
    SERIES_HEADER,
)
from tradenet.errors import (
    DomainError,
    DuplicateCountry,
    DuplicateYear,
    InvalidGroup,
    MalformedRow,
    NonPositiveValue,
)
from tradenet.io.csvfile import (
    PathLike,
    expect_arity,
    expect_header,
    located,
    parse_float,
    parse_int,
    parse_label,
    read_table,
)
from tradenet.logging_setup import get_logger
from tradenet.pipeline import CountrySeries, Panel
from tradenet.stats import GROUPS, CorrelationResult, GroupAssignment

logger = get_logger(__name__)

SeriesKind = Literal["gdp", "per_capita"]


def parse_series(
    path: PathLike,
    kind: SeriesKind,
    years: Optional[Tuple[int, int]] = None,
) -> Panel:
    """
    Parse ``country,year,value`` rows into per-country series.

    Args:
        path: CSV file.
        kind: "gdp" rejects non-positive values; "per_capita" accepts any finite value.
        years: Optional inclusive (first, last) filter.

    Raises:
        DuplicateYear, MalformedRow, NonPositiveValue, IoFailure
    """
    if kind not in ("gdp", "per_capita"):
        raise ValueError(f"Unknown series kind {kind!r}")
    header, rows = read_table(path)
    expect_header(header, SERIES_HEADER, path)

    values: Dict[str, Dict[int, float]] = defaultdict(dict)
    for line, cells in rows:
        expect_arity(cells, 3, path, line)
        country = parse_label(cells[0], "country", path, line)
        year = parse_int(cells[1], "year", path, line)
        value = parse_float(cells[2], "value", path, line)
        if year in values[country]:
            raise located(DuplicateYear(f"{country} has two values for {year}"), path, line)
        if kind == "gdp" and value <= 0:
            raise located(NonPositiveValue(f"GDP of {country} in {year} is {value!r}"), path, line)
        # Rows outside the year window are still validated
        values[country][year] = value

    panel = {}
    for country in sorted(values):
        kept = {
            y: v for y, v in values[country].items() if years is None or years[0] <= y <= years[1]
        }
        panel[country] = CountrySeries.from_mapping(country, kind, kept)
    logger.info("Parsed %s panel of %d countries from %s", kind, len(panel), path, extra={"category": "io"})
    return panel


def values_for_year(panel: Mapping[str, CountrySeries], year: int) -> Dict[str, float]:
    """Each country's value in ``year``; countries without one are left out."""
    picked = {}
    for country, series in panel.items():
        table = series.as_dict()
        if year in table:
            picked[country] = table[year]
    return picked


def parse_groups(path: PathLike) -> GroupAssignment:
    """
    Parse a ``country,group`` override file.

    Raises:
        InvalidGroup, DuplicateCountry, MalformedRow, IoFailure
    """
    header, rows = read_table(path)
    expect_header(header, GROUPS_HEADER, path)
    groups: Dict[str, int] = {}
    lines: Dict[str, int] = {}
    for line, cells in rows:
        expect_arity(cells, 2, path, line)
        country = parse_label(cells[0], "country", path, line)
        group = _parse_group(cells[1], path, line)
        if country in groups:
            raise located(
                DuplicateCountry(f"{country} already assigned on line {lines[country]}"), path, line
            )
        groups[country] = group
        lines[country] = line
    return GroupAssignment(groups)


def _parse_group(cell: str, path: PathLike, line: int) -> int:
    if cell not in {str(g) for g in GROUPS}:
        raise located(InvalidGroup(f"group must be 1 or 2, got {cell!r}"), path, line)
    return int(cell)


# ============================================================================
# Published-table fixtures
# ============================================================================


@dataclass(frozen=True)
class FixtureRow:
    """One row of a published correlation table: (r, p) pairs and a group."""

    country: str
    group: int
    results: Tuple[CorrelationResult, ...]


def _result(r_cell: str, p_cell: str, alpha: float, path: PathLike, line: int) -> CorrelationResult:
    r = parse_float(r_cell, "correlation", path, line)
    p = parse_float(p_cell, "p-value", path, line)
    if abs(r) > 1:
        raise located(DomainError(f"correlation {r!r} is outside [-1, 1]"), path, line)
    if not (0 <= p <= 1):
        raise located(DomainError(f"p-value {p!r} is outside [0, 1]"), path, line)
    return CorrelationResult.from_reported(r, p, alpha)


def parse_fixture(path: PathLike, alpha: float = DEFAULT_ALPHA) -> List[FixtureRow]:
    """
    Parse a transcribed results table.

    Accepts ``country,correlation,p,group`` (in vs out) or
    ``country,in_r,in_p,out_r,out_p,group`` (GDP vs in and out).

    Raises:
        MalformedRow, DomainError, InvalidGroup, DuplicateCountry, IoFailure
    """
    header, rows = read_table(path)
    lowered = tuple(h.lower() for h in header)
    if lowered == INOUT_FIXTURE_HEADER:
        pairs = 1
    elif lowered == GDP_FIXTURE_HEADER:
        pairs = 2
    else:
        raise MalformedRow(
            f"expected header {','.join(INOUT_FIXTURE_HEADER)} or {','.join(GDP_FIXTURE_HEADER)}",
            path=str(path),
            line=1,
        )

    parsed: List[FixtureRow] = []
    seen = set()
    for line, cells in rows:
        expect_arity(cells, len(header), path, line)
        country = parse_label(cells[0], "country", path, line)
        if country in seen:
            raise located(DuplicateCountry(f"{country} appears twice"), path, line)
        seen.add(country)
        results = tuple(
            _result(cells[1 + 2 * k], cells[2 + 2 * k], alpha, path, line) for k in range(pairs)
        )
        parsed.append(FixtureRow(country, _parse_group(cells[-1], path, line), results))
    return parsed


def fixture_kind(rows: List[FixtureRow]) -> Literal["inout", "gdp"]:
    if rows and len(rows[0].results) == 2:
        return "gdp"
    return "inout"
