"""``tradenet study inout|gdp`` and ``tradenet subset``."""

from pathlib import Path
from typing import Optional

import typer

from tradenet import ui
from tradenet.cli.flags import RunConfig, check_format, exit_on_error, parse_country_list, settings
from tradenet.cli.inputs import load_groups, load_networks
from tradenet.io import dumps_report, emit_report, load_report, parse_series
from tradenet.logging_setup import get_logger
from tradenet.pipeline import StudyReport, gdp_study, inout_study, subset_report
from tradenet.utils import PerformanceLogger

logger = get_logger(__name__)
study_app = typer.Typer(help="Run correlation studies over yearly trade networks", no_args_is_help=True)


def _print_tables(report: StudyReport) -> None:
    """Rate table (and class counts for GDP studies) to stdout."""
    for skip in report.skips:
        ui.warn(f"Skipped {skip.country} ({skip.reason}): {skip.detail}")
    if not report.rates:
        ui.warn("No income groups given; printing per-country results instead of rates")
        ui.data(ui.study_rows_table(report))
        return
    ui.data(ui.rate_table([(report.measure, model, rate) for model, rate in report.rates.items()]))
    if report.classes is not None:
        ui.data("\n" + ui.class_table([(report.measure, report.classes)]))


def _run(run: RunConfig) -> None:
    perf = PerformanceLogger(f"Study {run.kind}").start()
    networks = load_networks(run.trade, run.in_window)
    index = networks[0].countries
    groups = load_groups(run, index)
    perf.log_section("Inputs", {"years": len(networks), "countries": index.size})

    if run.kind == "inout":
        report = inout_study(
            networks,
            run.measure,  # type: ignore[arg-type]
            run.solver,
            groups=groups,
            alpha=run.alpha,
            min_years=run.min_years,
            threads=run.threads,
        )
    else:
        panel = parse_series(run.gdp, "gdp")  # type: ignore[arg-type]
        report = gdp_study(
            networks,
            panel,
            run.measure,  # type: ignore[arg-type]
            run.solver,
            groups=groups,
            alpha=run.alpha,
            compare=run.compare,  # type: ignore[arg-type]
            min_years=run.min_years,
            threads=run.threads,
        )
    report.stamp = run.stamp
    perf.log_section("Study", {"rows": len(report.rows), "skips": len(report.skips)})

    if run.out is not None:
        emit_report(report, run.fmt, run.out)  # type: ignore[arg-type]
        ui.info(f"Report written to {run.out}")
    _print_tables(report)
    perf.log_complete()


def _study(
    kind: str,
    trade: Optional[Path],
    gdp: Optional[Path],
    measure: str,
    groups: Optional[Path],
    per_capita: Optional[Path],
    reference_year: Optional[int],
    alpha: Optional[float],
    compare: Optional[str],
    out: Optional[Path],
    fmt: str,
    stamp: Optional[str],
    manifest: Optional[Path],
    start_year: Optional[int],
    end_year: Optional[int],
    min_years: Optional[int],
    threads: Optional[int],
    tol: Optional[float],
    max_iter: Optional[int],
    dangling: Optional[str],
) -> None:
    with exit_on_error():
        run = RunConfig.from_flags(
            kind,
            config=settings(),
            manifest=manifest,
            trade=trade,
            gdp=gdp,
            measure=measure,
            groups=groups,
            per_capita=per_capita,
            reference_year=reference_year,
            start_year=start_year,
            end_year=end_year,
            alpha=alpha,
            compare=compare,
            min_years=min_years,
            tol=tol,
            max_iter=max_iter,
            dangling=dangling,
            threads=threads,
            out=out,
            fmt=fmt,
            stamp=stamp,
        )
        _run(run)


# Shared option declarations for both study kinds
TRADE = typer.Option(None, "--trade", help="Long trade CSV or a directory of <year>.csv grids")
MEASURE = typer.Option(..., "--measure", help="degree, eigenvector or randomwalk")
GROUPS = typer.Option(None, "--groups", help="country,group file")
PER_CAPITA = typer.Option(None, "--per-capita", help="Per-capita income panel used to split groups")
REFERENCE_YEAR = typer.Option(None, "--reference-year", help="Year whose per-capita income splits groups")
ALPHA = typer.Option(None, "--alpha", help="Significance level (default from config, 0.05)")
OUT = typer.Option(None, "--out", help="Report destination")
FORMAT = typer.Option("json", "--format", help="json or csv")
STAMP = typer.Option(None, "--stamp", help="Free-form label stored in the report")
MANIFEST = typer.Option(None, "--manifest", help="YAML manifest naming the inputs")
START_YEAR = typer.Option(None, "--start-year", help="First year to include")
END_YEAR = typer.Option(None, "--end-year", help="Last year to include")
MIN_YEARS = typer.Option(None, "--min-years", help="Minimum common years per country")
THREADS = typer.Option(None, "--threads", help="Worker threads")
TOL = typer.Option(None, "--tol", help="Power-iteration L1 tolerance")
MAX_ITER = typer.Option(None, "--max-iter", help="Power-iteration sweep cap")
DANGLING = typer.Option(None, "--dangling", help="error or uniform")


@study_app.command("inout")
def study_inout(
    trade: Optional[Path] = TRADE,
    measure: str = MEASURE,
    groups: Optional[Path] = GROUPS,
    per_capita: Optional[Path] = PER_CAPITA,
    reference_year: Optional[int] = REFERENCE_YEAR,
    alpha: Optional[float] = ALPHA,
    out: Optional[Path] = OUT,
    fmt: str = FORMAT,
    stamp: Optional[str] = STAMP,
    manifest: Optional[Path] = MANIFEST,
    start_year: Optional[int] = START_YEAR,
    end_year: Optional[int] = END_YEAR,
    min_years: Optional[int] = MIN_YEARS,
    threads: Optional[int] = THREADS,
    tol: Optional[float] = TOL,
    max_iter: Optional[int] = MAX_ITER,
    dangling: Optional[str] = DANGLING,
) -> None:
    """Correlate each country's in-centrality with its out-centrality."""
    _study(
        "inout", trade, None, measure, groups, per_capita, reference_year, alpha, None,
        out, fmt, stamp, manifest, start_year, end_year, min_years, threads, tol, max_iter, dangling,
    )


@study_app.command("gdp")
def study_gdp(
    trade: Optional[Path] = TRADE,
    gdp: Optional[Path] = typer.Option(None, "--gdp", help="GDP panel (country,year,value)"),
    measure: str = MEASURE,
    groups: Optional[Path] = GROUPS,
    per_capita: Optional[Path] = PER_CAPITA,
    reference_year: Optional[int] = REFERENCE_YEAR,
    alpha: Optional[float] = ALPHA,
    compare: Optional[str] = typer.Option(None, "--compare", help="abs or signed"),
    out: Optional[Path] = OUT,
    fmt: str = FORMAT,
    stamp: Optional[str] = STAMP,
    manifest: Optional[Path] = MANIFEST,
    start_year: Optional[int] = START_YEAR,
    end_year: Optional[int] = END_YEAR,
    min_years: Optional[int] = MIN_YEARS,
    threads: Optional[int] = THREADS,
    tol: Optional[float] = TOL,
    max_iter: Optional[int] = MAX_ITER,
    dangling: Optional[str] = DANGLING,
) -> None:
    """Correlate each country's weighted GDP with its in- and out-centrality."""
    _study(
        "gdp", trade, gdp, measure, groups, per_capita, reference_year, alpha, compare,
        out, fmt, stamp, manifest, start_year, end_year, min_years, threads, tol, max_iter, dangling,
    )


def subset_command(
    report: Path = typer.Option(..., "--report", help="JSON report written by tradenet study"),
    countries: str = typer.Option(..., "--countries", help='Comma-separated labels, e.g. "Brazil,India"'),
    out: Optional[Path] = typer.Option(None, "--out", help="Destination (default: JSON on stdout)"),
    fmt: str = typer.Option("json", "--format", help="json or csv"),
) -> None:
    """Restrict a study report to a list of countries."""
    with exit_on_error():
        check_format(fmt)
        wanted = parse_country_list(countries)
        if out is None and fmt != "json":
            raise ValueError("--format csv needs --out")
        restricted = subset_report(load_report(report), wanted)
        if out is None:
            ui.data(dumps_report(restricted))
        else:
            emit_report(restricted, fmt, out)  # type: ignore[arg-type]
