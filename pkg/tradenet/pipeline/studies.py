"""Correlation studies over yearly trade networks.

Two studies are supported: in-centrality against out-centrality for each
country, and weighted GDP against both centralities. Both produce a
StudyReport with one row or one skip per country, in country-index order.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from tradenet.centrality import Measure, SolverOptions
from tradenet.constants import DEFAULT_ALPHA, DEFAULT_COMPARE_RULE, DEFAULT_MIN_YEARS, MIN_SAMPLES
from tradenet.errors import EmptyInput, InsufficientYears, UnknownCountry, ZeroVariance
from tradenet.logging_setup import get_logger
from tradenet.network import AdjacencyMatrix
from tradenet.pipeline.series import CountrySeries, aligned, centrality_series, weighted_gdp
from tradenet.stats import (
    ComparisonRule,
    CorrelationClass,
    CorrelationResult,
    GroupAssignment,
    SignificantRate,
    TendencyTable,
    check_alpha,
    classify,
    pearson,
    significant_rate,
    tendency_counts,
)
from tradenet.utils import PerformanceLogger

logger = get_logger(__name__)

StudyKind = Literal["inout", "gdp"]

# Rate table keys
IN_VS_OUT = "in_vs_out"
IN_VS_GDP = "in_vs_gdp"
OUT_VS_GDP = "out_vs_gdp"

SKIP_ZERO_VARIANCE = "ZERO_VARIANCE"
SKIP_INSUFFICIENT_OVERLAP = "INSUFFICIENT_OVERLAP"


@dataclass(frozen=True)
class InOutRow:
    country: str
    group: Optional[int]
    result: CorrelationResult


@dataclass(frozen=True)
class GdpRow:
    country: str
    group: Optional[int]
    in_result: CorrelationResult
    out_result: CorrelationResult
    cls: CorrelationClass


StudyRow = Union[InOutRow, GdpRow]


@dataclass(frozen=True)
class Skip:
    """A country left out of a study, with the error code that caused it."""

    country: str
    reason: str
    detail: str = ""


@dataclass
class StudyReport:
    """Per-country results of one study plus group-level aggregates."""

    kind: StudyKind
    measure: str
    alpha: float
    countries: List[str]
    rows: List[StudyRow] = field(default_factory=list)
    skips: List[Skip] = field(default_factory=list)
    rates: Optional[Dict[str, SignificantRate]] = None
    classes: Optional[TendencyTable] = None
    compare: Optional[ComparisonRule] = None
    years: Optional[Tuple[int, int]] = None
    stamp: Optional[str] = None

    def row(self, country: str) -> StudyRow:
        for row in self.rows:
            if row.country == country:
                return row
        raise UnknownCountry(f"No result for {country!r} in this report")

    @property
    def group_sizes(self) -> Tuple[int, int]:
        groups = [row.group for row in self.rows]
        return (groups.count(1), groups.count(2))


def _check_years(yearly: Sequence[AdjacencyMatrix], min_years: int) -> List[int]:
    if min_years < MIN_SAMPLES:
        raise ValueError(f"min_years must be at least {MIN_SAMPLES}, got {min_years}")
    years = sorted({a.year for a in yearly})
    if len(years) < min_years:
        raise InsufficientYears(
            f"Study needs at least {min_years} years, got {len(years)}"
        )
    return years


def _correlate(
    country: str,
    first: CountrySeries,
    second: CountrySeries,
    alpha: float,
    min_years: int,
) -> Union[Tuple[CorrelationResult, List[int]], Skip]:
    years, xs, ys = aligned(first, second)
    if len(years) < min_years:
        return Skip(country, SKIP_INSUFFICIENT_OVERLAP, f"{len(years)} common years, need {min_years}")
    try:
        return pearson(xs, ys, alpha), years
    except ZeroVariance as exc:
        return Skip(country, SKIP_ZERO_VARIANCE, str(exc))


def _year_span(spans: List[List[int]]) -> Optional[Tuple[int, int]]:
    used = [year for span in spans for year in span]
    return (min(used), max(used)) if used else None


def _rates(pairs: Sequence[Tuple[str, CorrelationResult]], groups: Optional[GroupAssignment]) -> Optional[SignificantRate]:
    if groups is None:
        return None
    try:
        return significant_rate(pairs, groups)
    except EmptyInput:
        return None


def inout_study(
    yearly: Sequence[AdjacencyMatrix],
    measure: Measure,
    opts: SolverOptions = SolverOptions(),
    groups: Optional[GroupAssignment] = None,
    alpha: float = DEFAULT_ALPHA,
    min_years: int = DEFAULT_MIN_YEARS,
    threads: int = 1,
) -> StudyReport:
    """
    Correlate each country's in-centrality series with its out-centrality series.

    Raises:
        InsufficientYears: If fewer than ``min_years`` years are given.
        MissingGroup: If ``groups`` omits a country of the index.
        Any solver error, tagged with its year.
    """
    check_alpha(alpha)
    years = _check_years(yearly, min_years)
    index = yearly[0].countries
    if groups is not None:
        groups.require_all(index.names)

    perf = PerformanceLogger("InOutStudy").start()
    in_series = centrality_series(yearly, measure, "in", opts, threads)
    out_series = centrality_series(yearly, measure, "out", opts, threads)
    perf.log_section("Centrality series", {"measure": measure, "years": len(years)})

    report = StudyReport("inout", measure, alpha, list(index.names))
    spans = []
    for country in index.names:
        outcome = _correlate(country, in_series[country], out_series[country], alpha, min_years)
        if isinstance(outcome, Skip):
            logger.info("Skipping %s: %s", country, outcome.detail, extra={"category": "study"})
            report.skips.append(outcome)
            continue
        result, used = outcome
        spans.append(used)
        group = groups.group_of(country) if groups is not None else None
        report.rows.append(InOutRow(country, group, result))
    perf.log_section("Correlations", {"rows": len(report.rows), "skips": len(report.skips)})

    rate = _rates([(row.country, row.result) for row in report.rows], groups)
    report.rates = {IN_VS_OUT: rate} if rate is not None else None
    report.years = _year_span(spans)
    perf.log_complete()
    return report


def gdp_study(
    yearly: Sequence[AdjacencyMatrix],
    gdp_panel: Mapping[str, CountrySeries],
    measure: Measure,
    opts: SolverOptions = SolverOptions(),
    groups: Optional[GroupAssignment] = None,
    alpha: float = DEFAULT_ALPHA,
    compare: ComparisonRule = DEFAULT_COMPARE_RULE,  # type: ignore[assignment]
    min_years: int = DEFAULT_MIN_YEARS,
    threads: int = 1,
) -> StudyReport:
    """
    Correlate each country's weighted GDP with its in- and out-centrality.

    GDP is weighted over the indexed countries only, for the trade years the
    panel covers.

    Raises:
        InsufficientYears: If trade and GDP share fewer than ``min_years`` years.
        MissingYearValue, NonPositiveGDP: From GDP weighting.
        MissingGroup: If ``groups`` omits a country of the index.
        Any solver error, tagged with its year.
    """
    check_alpha(alpha)
    trade_years = _check_years(yearly, min_years)
    index = yearly[0].countries
    if groups is not None:
        groups.require_all(index.names)

    gdp_years = {year for c in index.names if c in gdp_panel for year in gdp_panel[c].years}
    common = sorted(set(trade_years) & gdp_years)
    if len(common) < min_years:
        raise InsufficientYears(
            f"Trade and GDP data share {len(common)} years, need at least {min_years}"
        )

    perf = PerformanceLogger("GdpStudy").start()
    shares = weighted_gdp(gdp_panel, index, common)
    in_series = centrality_series(yearly, measure, "in", opts, threads)
    out_series = centrality_series(yearly, measure, "out", opts, threads)
    perf.log_section("Series", {"measure": measure, "years": len(common)})

    report = StudyReport("gdp", measure, alpha, list(index.names), compare=compare)
    spans = []
    for country in index.names:
        in_outcome = _correlate(country, shares[country], in_series[country], alpha, min_years)
        out_outcome = _correlate(country, shares[country], out_series[country], alpha, min_years)
        skip = next((o for o in (in_outcome, out_outcome) if isinstance(o, Skip)), None)
        if skip is not None:
            logger.info("Skipping %s: %s", country, skip.detail, extra={"category": "study"})
            report.skips.append(skip)
            continue
        (in_result, in_years), (out_result, out_years) = in_outcome, out_outcome
        spans.extend([in_years, out_years])
        group = groups.group_of(country) if groups is not None else None
        report.rows.append(
            GdpRow(country, group, in_result, out_result, classify(in_result, out_result, compare))
        )
    perf.log_section("Correlations", {"rows": len(report.rows), "skips": len(report.skips)})

    _aggregate_gdp(report, groups)
    report.years = _year_span(spans)
    perf.log_complete()
    return report


def _aggregate_gdp(report: StudyReport, groups: Optional[GroupAssignment]) -> None:
    rows = [row for row in report.rows if isinstance(row, GdpRow)]
    in_rate = _rates([(r.country, r.in_result) for r in rows], groups)
    out_rate = _rates([(r.country, r.out_result) for r in rows], groups)
    report.rates = (
        {IN_VS_GDP: in_rate, OUT_VS_GDP: out_rate}
        if in_rate is not None and out_rate is not None
        else None
    )
    report.classes = (
        tendency_counts([(r.country, r.cls) for r in rows], groups) if groups is not None else None
    )


def report_from_results(
    kind: StudyKind,
    measure: str,
    rows: Sequence[Tuple[str, int, Sequence[CorrelationResult]]],
    alpha: float = DEFAULT_ALPHA,
    compare: ComparisonRule = DEFAULT_COMPARE_RULE,  # type: ignore[assignment]
) -> StudyReport:
    """
    Build a report from already-computed results, e.g. published tables.

    Each row is (country, group, results) with one result for "inout" and
    (in, out) for "gdp". Results are re-thresholded at ``alpha``.
    """
    check_alpha(alpha)
    report = StudyReport(kind, measure, alpha, [c for c, _, _ in rows], compare=compare if kind == "gdp" else None)
    groups = GroupAssignment({country: group for country, group, _ in rows})
    for country, group, results in rows:
        results = [r.with_alpha(alpha) for r in results]
        if kind == "inout":
            report.rows.append(InOutRow(country, group, results[0]))
        else:
            in_result, out_result = results
            report.rows.append(
                GdpRow(country, group, in_result, out_result, classify(in_result, out_result, compare))
            )
    if kind == "inout":
        rate = _rates([(r.country, r.result) for r in report.rows], groups)
        report.rates = {IN_VS_OUT: rate} if rate is not None else None
    else:
        _aggregate_gdp(report, groups)
    return report


def subset_report(report: StudyReport, countries: Sequence[str]) -> StudyReport:
    """
    Restrict a report to some countries, keeping report order.

    Group rates and class counts are dropped: they do not describe a
    hand-picked subset.

    Raises:
        UnknownCountry: If a label is not part of the report.
    """
    known = set(report.countries)
    unknown = [c for c in countries if c not in known]
    if unknown:
        raise UnknownCountry(f"Not in report: {', '.join(unknown)}")
    wanted = set(countries)
    return replace(
        report,
        countries=[c for c in report.countries if c in wanted],
        rows=[row for row in report.rows if row.country in wanted],
        skips=[skip for skip in report.skips if skip.country in wanted],
        rates=None,
        classes=None,
    )
