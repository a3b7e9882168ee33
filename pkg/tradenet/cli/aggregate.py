"""``tradenet aggregate inout|gdp``: group aggregates from transcribed result tables."""

from pathlib import Path
from typing import List, Optional

import typer

from tradenet import ui
from tradenet.cli.flags import UsageError, exit_on_error, settings
from tradenet.constants import COMPARE_RULES
from tradenet.errors import MalformedRow
from tradenet.io import fixture_kind, parse_fixture
from tradenet.logging_setup import get_logger
from tradenet.pipeline import StudyReport, report_from_results
from tradenet.stats import average_rates, average_tendency

logger = get_logger(__name__)
aggregate_app = typer.Typer(help="Aggregate published-style correlation tables", no_args_is_help=True)


def _load_reports(
    kind: str,
    fixtures: List[Path],
    measures: Optional[List[str]],
    alpha: float,
    compare: str,
) -> List[StudyReport]:
    if measures and len(measures) != len(fixtures):
        raise UsageError(f"Got {len(measures)} --measure values for {len(fixtures)} --fixture files")
    if not (0 < alpha < 1):
        raise UsageError(f"--alpha must lie strictly between 0 and 1, got {alpha!r}")
    if compare not in COMPARE_RULES:
        raise UsageError(f"--compare must be one of {', '.join(COMPARE_RULES)}, got {compare!r}")
    names = measures or [path.stem for path in fixtures]

    reports = []
    for path, name in zip(fixtures, names):
        rows = parse_fixture(path, alpha)
        found = fixture_kind(rows)
        if rows and found != kind:
            raise MalformedRow(f"holds {found} results, expected {kind}", path=str(path), line=1)
        reports.append(
            report_from_results(
                kind,  # type: ignore[arg-type]
                name,
                [(row.country, row.group, row.results) for row in rows],
                alpha=alpha,
                compare=compare,  # type: ignore[arg-type]
            )
        )
    return reports


def _print(reports: List[StudyReport]) -> None:
    rated = [r for r in reports if r.rates]
    ui.data(ui.rate_table([(r.measure, model, rate) for r in rated for model, rate in r.rates.items()]))

    classified = [r for r in reports if r.classes is not None]
    if classified:
        ui.data("\n" + ui.class_table([(r.measure, r.classes) for r in classified]))

    if len(rated) > 1:
        models = list(rated[0].rates)
        ui.data(
            "\n"
            + ui.average_table([(m, average_rates([r.rates[m] for r in rated])) for m in models])
        )
    if len(classified) > 1:
        ui.data("\n" + ui.tendency_average_table(average_tendency([r.classes for r in classified])))


def _aggregate(
    kind: str,
    fixtures: List[Path],
    measures: Optional[List[str]],
    alpha: Optional[float],
    compare: Optional[str],
) -> None:
    with exit_on_error():
        config = settings()
        reports = _load_reports(
            kind,
            fixtures,
            measures,
            alpha if alpha is not None else config.study.alpha,
            compare if compare is not None else config.study.compare,
        )
        _print(reports)


FIXTURE = typer.Option(..., "--fixture", help="Result table CSV; repeat for several measures")
MEASURE = typer.Option(None, "--measure", help="Measure label per fixture (default: file stem)")
ALPHA = typer.Option(None, "--alpha", help="Significance level used to re-threshold p-values")


@aggregate_app.command("inout")
def aggregate_inout(
    fixture: List[Path] = FIXTURE,
    measure: Optional[List[str]] = MEASURE,
    alpha: Optional[float] = ALPHA,
) -> None:
    """Significant in-vs-out rates per group from country,correlation,p,group tables."""
    _aggregate("inout", fixture, measure, alpha, None)


@aggregate_app.command("gdp")
def aggregate_gdp(
    fixture: List[Path] = FIXTURE,
    measure: Optional[List[str]] = MEASURE,
    alpha: Optional[float] = ALPHA,
    compare: Optional[str] = typer.Option(None, "--compare", help="abs or signed"),
) -> None:
    """Rates, class counts and tendencies from country,in_r,in_p,out_r,out_p,group tables."""
    _aggregate("gdp", fixture, measure, alpha, compare)
