"""``tradenet centrality``: per-country centrality for one year or all years."""

import json
from pathlib import Path
from typing import List, Optional

import typer

from tradenet import ui
from tradenet.centrality import CentralityVector
from tradenet.cli.flags import (
    check_centrality_flags,
    check_format,
    exit_on_error,
    settings,
    solver_options,
    thread_count,
)
from tradenet.cli.inputs import load_networks
from tradenet.errors import IoFailure
from tradenet.io.csvfile import format_float, render_table
from tradenet.logging_setup import get_logger
from tradenet.pipeline import centrality_vectors
from tradenet.utils import PerformanceLogger

logger = get_logger(__name__)


def _csv_text(vectors: List[CentralityVector], all_years: bool) -> str:
    if all_years:
        return render_table(
            ("year", "country", "value"),
            [(v.year, name, format_float(value)) for v in vectors for name, value in v.as_dict().items()],
        )
    (vector,) = vectors
    return render_table(
        ("country", "value"),
        [(name, format_float(value)) for name, value in vector.as_dict().items()],
    )


def _json_text(vectors: List[CentralityVector], measure: str, direction: str) -> str:
    document = {
        "measure": measure,
        "direction": direction,
        "years": [v.year for v in vectors],
        "vectors": [
            {
                "year": v.year,
                "leading_eigenvalue": v.leading_eigenvalue,
                "values": v.as_dict(),
            }
            for v in vectors
        ],
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        ui.data(text)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"Cannot write {out}: {exc.strerror or exc}") from None
    logger.info("Wrote centrality values to %s", out, extra={"category": "io"})


def centrality_command(
    trade: Path = typer.Option(..., "--trade", help="Long trade CSV or a directory of <year>.csv grids"),
    measure: str = typer.Option(..., "--measure", help="degree, eigenvector or randomwalk"),
    direction: str = typer.Option(..., "--direction", help="in or out"),
    year: Optional[int] = typer.Option(None, "--year", help="Year to compute"),
    all_years: bool = typer.Option(False, "--all-years", help="Compute every year as a year,country,value table"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Power-iteration L1 tolerance"),
    max_iter: Optional[int] = typer.Option(None, "--max-iter", help="Power-iteration sweep cap"),
    dangling: Optional[str] = typer.Option(None, "--dangling", help="error or uniform"),
    fmt: str = typer.Option("csv", "--format", help="csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default: stdout)"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads"),
) -> None:
    """Compute per-country centrality values from a trade table."""
    with exit_on_error():
        check_centrality_flags(measure, direction, year, all_years)
        check_format(fmt)
        config = settings()
        opts = solver_options(config, tol, max_iter, dangling)
        workers = thread_count(config, threads)

        perf = PerformanceLogger("Centrality").start()
        networks = load_networks(trade, (lambda y: y == year) if year is not None else (lambda y: True))
        if year is None and not all_years and len(networks) > 1:
            raise ValueError(
                f"{trade} covers {len(networks)} years; pass --year Y or --all-years"
            )
        perf.log_section("Load", {"years": len(networks)})

        vectors = centrality_vectors(networks, measure, direction, opts, workers)  # type: ignore[arg-type]
        perf.log_section("Solve", {"measure": measure, "direction": direction})

        text = _json_text(vectors, measure, direction) if fmt == "json" else _csv_text(vectors, all_years)
        _write(text, out)
        perf.log_complete()
