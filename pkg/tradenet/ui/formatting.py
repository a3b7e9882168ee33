"""Tab-separated tables for standard output, plus the config summary."""

from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from rich.box import DOUBLE
from rich.table import Table

from tradenet.constants import UI_BORDER_COLOR_OUTPUT
from tradenet.stats import CORRELATION_CLASSES, GROUPS, GroupRate, SignificantRate, TendencyTable
from tradenet.ui.output import PLAIN_MODE, console, data

if TYPE_CHECKING:  # Avoid circular import
    from tradenet.configuration.user_config import TradenetConfig
    from tradenet.pipeline import StudyReport

RATE_HEADER = ("measure", "model", "group1", "group2", "total")
CLASS_HEADER = ("measure", "group", *CORRELATION_CLASSES, "in_tendency", "out_tendency")
TENDENCY_AVERAGE_HEADER = ("measure", "group", "in_tendency", "out_tendency")


def _tsv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(str(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def percent(rate: float) -> str:
    return f"{rate * 100:.2f}%"


def rate_cell(rate: Optional[GroupRate]) -> str:
    """``94.44% (34/36)``; a group with no countries prints as ``-``."""
    if rate is None:
        return "-"
    return f"{percent(rate.rate)} ({rate.significant}/{rate.total})"


def rate_table(rows: Sequence[Tuple[str, str, SignificantRate]]) -> str:
    """One line per (measure, model) with the group and total significant rates."""
    return _tsv(
        RATE_HEADER,
        [
            (measure, model, *(rate_cell(rate.groups.get(g)) for g in GROUPS), rate_cell(rate.total))
            for measure, model, rate in rows
        ],
    )


def average_table(rows: Sequence[Tuple[str, Dict[str, float]]], measure: str = "average") -> str:
    """Cross-measure mean rates, one line per model."""
    return _tsv(
        RATE_HEADER,
        [
            (
                measure,
                model,
                *(percent(avg[str(g)]) if str(g) in avg else "-" for g in GROUPS),
                percent(avg["total"]),
            )
            for model, avg in rows
        ],
    )


def class_table(rows: Sequence[Tuple[str, TendencyTable]]) -> str:
    """Per-group class counts and tendency roll-ups for each measure."""
    lines: List[Tuple[object, ...]] = []
    for measure, table in rows:
        for g in GROUPS:
            lines.append(
                (
                    measure,
                    g,
                    *(table.count(g, c) for c in CORRELATION_CLASSES),
                    table.in_tendency(g),
                    table.out_tendency(g),
                )
            )
    return _tsv(CLASS_HEADER, lines)


def tendency_average_table(averages: Dict[int, Tuple[float, float]], measure: str = "average") -> str:
    return _tsv(
        TENDENCY_AVERAGE_HEADER,
        [(measure, g, f"{averages[g][0]:.2f}", f"{averages[g][1]:.2f}") for g in GROUPS],
    )


def print_configuration_summary(config: "TradenetConfig", source: str) -> None:
    """Print the effective settings; a rich table unless in plain mode."""
    settings = [
        (f"{section}.{key}", value)
        for section, values in config.to_dict().items()
        for key, value in values.items()
    ]
    if "threads" not in config.runtime.to_dict():
        settings.append(("runtime.threads", "auto"))

    if PLAIN_MODE:
        data(f"# {source}\n" + "".join(f"{key}\t{value}\n" for key, value in settings))
        return

    table = Table(
        title="Configuration",
        caption=source,
        box=DOUBLE,
        border_style=UI_BORDER_COLOR_OUTPUT,
        title_style="bold bright_white",
        show_header=False,
        padding=(0, 1),
    )
    for key, value in settings:
        table.add_row(f"[bold cyan]{key}[/bold cyan]", str(value))
    console.print(table)


def study_rows_table(report: "StudyReport") -> str:
    """Per-country results of a study, one line per country."""
    if report.kind == "inout":
        return _tsv(
            ("country", "r", "p", "significant"),
            [(row.country, repr(row.result.r), repr(row.result.p), row.result.significant) for row in report.rows],
        )
    return _tsv(
        ("country", "in_r", "in_p", "out_r", "out_p", "class"),
        [
            (
                row.country,
                repr(row.in_result.r),
                repr(row.in_result.p),
                repr(row.out_result.r),
                repr(row.out_result.p),
                row.cls,
            )
            for row in report.rows
        ],
    )
