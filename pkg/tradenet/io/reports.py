"""Study report serialization.

JSON holds the whole report in one document. CSV writes one file per table:
``<stem>.csv`` (per-country rows), ``<stem>.rates.csv``, ``<stem>.classes.csv``
(GDP studies) and ``<stem>.skips.csv``. Floats are written in their shortest
round-trip form, so parsing a report back yields bit-identical numbers.
"""

import json
import math
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from tradenet.constants import GDP_REPORT_HEADER, INOUT_REPORT_HEADER, REPORT_SCHEMA_VERSION
from tradenet.errors import IoFailure, MalformedRow
from tradenet.io.csvfile import PathLike, format_float, write_table
from tradenet.logging_setup import get_logger
from tradenet.pipeline import GdpRow, InOutRow, Skip, StudyReport
from tradenet.stats import (
    CORRELATION_CLASSES,
    GROUPS,
    CorrelationResult,
    GroupRate,
    SignificantRate,
    TendencyTable,
)

logger = get_logger(__name__)

ReportFormat = Literal["json", "csv"]


def tool_version() -> str:
    try:
        return version("tradenet")
    except PackageNotFoundError:
        return "unknown"


# ============================================================================
# JSON
# ============================================================================


def _result_to_dict(result: CorrelationResult) -> Dict[str, Any]:
    t_stat = result.t_stat
    return {
        "r": result.r,
        "p": result.p,
        "n": result.n,
        # JSON has no infinity; |r| = 1 is recovered from r on load
        "t": t_stat if t_stat is not None and math.isfinite(t_stat) else None,
        "significant": result.significant,
    }


def _result_from_dict(data: Dict[str, Any], alpha: float) -> CorrelationResult:
    r = float(data["r"])
    t_stat = data.get("t")
    n = data.get("n")
    if t_stat is None and n is not None and abs(r) == 1.0:
        t_stat = math.copysign(math.inf, r)
    return CorrelationResult(r=r, p=float(data["p"]), n=n, t_stat=t_stat, alpha=alpha)


def _rate_to_dict(rate: SignificantRate) -> Dict[str, Any]:
    entries = {
        str(g): {"significant": r.significant, "total": r.total, "rate": r.rate}
        for g, r in rate.groups.items()
    }
    entries["total"] = {
        "significant": rate.total.significant,
        "total": rate.total.total,
        "rate": rate.total.rate,
    }
    return entries


def _rate_from_dict(data: Dict[str, Any]) -> SignificantRate:
    groups = {
        int(key): GroupRate(value["significant"], value["total"])
        for key, value in data.items()
        if key != "total"
    }
    total = data["total"]
    return SignificantRate(groups, GroupRate(total["significant"], total["total"]))


def report_to_dict(report: StudyReport) -> Dict[str, Any]:
    """Plain-data form of a report, in a fixed key order."""
    document: Dict[str, Any] = {
        "schema": REPORT_SCHEMA_VERSION,
        "tool": "tradenet",
        "version": tool_version(),
        "kind": report.kind,
        "measure": report.measure,
        "alpha": report.alpha,
        "compare": report.compare,
        "years": list(report.years) if report.years is not None else None,
    }
    if report.stamp is not None:
        document["stamp"] = report.stamp

    rows: List[Dict[str, Any]] = []
    for row in report.rows:
        if isinstance(row, InOutRow):
            rows.append({"country": row.country, "group": row.group, **_result_to_dict(row.result)})
        else:
            rows.append(
                {
                    "country": row.country,
                    "group": row.group,
                    "in": _result_to_dict(row.in_result),
                    "out": _result_to_dict(row.out_result),
                    "class": row.cls,
                }
            )

    document["countries"] = list(report.countries)
    document["rows"] = rows
    document["skips"] = [{"country": s.country, "reason": s.reason, "detail": s.detail} for s in report.skips]
    document["rates"] = (
        {name: _rate_to_dict(rate) for name, rate in report.rates.items()} if report.rates else None
    )
    if report.classes is not None:
        document["classes"] = {
            str(g): {
                **{c: report.classes.count(g, c) for c in CORRELATION_CLASSES},
                "in_tendency": report.classes.in_tendency(g),
                "out_tendency": report.classes.out_tendency(g),
            }
            for g in GROUPS
        }
    else:
        document["classes"] = None
    return document


def report_from_dict(data: Dict[str, Any]) -> StudyReport:
    """Inverse of report_to_dict."""
    try:
        alpha = float(data["alpha"])
        kind = data["kind"]
        rows = []
        for item in data["rows"]:
            if kind == "inout":
                rows.append(InOutRow(item["country"], item["group"], _result_from_dict(item, alpha)))
            else:
                rows.append(
                    GdpRow(
                        item["country"],
                        item["group"],
                        _result_from_dict(item["in"], alpha),
                        _result_from_dict(item["out"], alpha),
                        item["class"],
                    )
                )
        classes = None
        if data.get("classes"):
            classes = TendencyTable(
                {g: {c: int(data["classes"][str(g)][c]) for c in CORRELATION_CLASSES} for g in GROUPS}
            )
        rates = data.get("rates")
        return StudyReport(
            kind=kind,
            measure=data["measure"],
            alpha=alpha,
            countries=list(data["countries"]),
            rows=rows,
            skips=[Skip(s["country"], s["reason"], s.get("detail", "")) for s in data["skips"]],
            rates={name: _rate_from_dict(rate) for name, rate in rates.items()} if rates else None,
            classes=classes,
            compare=data.get("compare"),
            years=tuple(data["years"]) if data.get("years") else None,
            stamp=data.get("stamp"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedRow(f"report document is incomplete or invalid: {exc}") from None


def dumps_report(report: StudyReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def load_report(path: PathLike) -> StudyReport:
    """
    Read a JSON report written by emit_report.

    Raises:
        IoFailure: If the file cannot be read or is not JSON.
        MalformedRow: If the document lacks report fields.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoFailure(f"Cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise IoFailure(f"{path} is not a JSON report: {exc}") from None
    return report_from_dict(data)


# ============================================================================
# CSV
# ============================================================================


def _group_cell(group: Optional[int]) -> str:
    return "" if group is None else str(group)


def csv_paths(path: PathLike) -> Dict[str, Path]:
    """Files written for a CSV report at ``path``."""
    path = Path(path)
    stem = path.with_suffix("")
    return {
        "rows": path,
        "rates": stem.with_name(stem.name + ".rates.csv"),
        "classes": stem.with_name(stem.name + ".classes.csv"),
        "skips": stem.with_name(stem.name + ".skips.csv"),
    }


def _emit_csv(report: StudyReport, path: PathLike) -> None:
    paths = csv_paths(path)
    if report.kind == "inout":
        write_table(
            paths["rows"],
            INOUT_REPORT_HEADER,
            [
                (row.country, format_float(row.result.r), format_float(row.result.p), _group_cell(row.group))
                for row in report.rows
                if isinstance(row, InOutRow)
            ],
        )
    else:
        write_table(
            paths["rows"],
            GDP_REPORT_HEADER,
            [
                (
                    row.country,
                    format_float(row.in_result.r),
                    format_float(row.in_result.p),
                    format_float(row.out_result.r),
                    format_float(row.out_result.p),
                    row.cls,
                    _group_cell(row.group),
                )
                for row in report.rows
                if isinstance(row, GdpRow)
            ],
        )

    if report.rates:
        rate_rows = []
        for name, rate in report.rates.items():
            for group, entry in sorted(rate.groups.items()):
                rate_rows.append((name, str(group), entry.significant, entry.total, format_float(entry.rate)))
            rate_rows.append(
                (name, "total", rate.total.significant, rate.total.total, format_float(rate.total.rate))
            )
        write_table(paths["rates"], ("table", "group", "significant", "total", "rate"), rate_rows)

    if report.classes is not None:
        write_table(
            paths["classes"],
            ("group", "class", "count"),
            [(g, c, report.classes.count(g, c)) for g in GROUPS for c in CORRELATION_CLASSES],
        )

    write_table(
        paths["skips"],
        ("country", "reason", "detail"),
        [(s.country, s.reason, s.detail) for s in report.skips],
    )


def emit_report(report: StudyReport, fmt: ReportFormat, path: PathLike) -> None:
    """
    Write a report as JSON or as a set of CSV tables.

    Raises:
        IoFailure: If the destination cannot be written.
    """
    if fmt == "json":
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(dumps_report(report), encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"Cannot write {path}: {exc.strerror or exc}") from None
    elif fmt == "csv":
        _emit_csv(report, path)
    else:
        raise ValueError(f"Unknown report format {fmt!r}")
    logger.info("Wrote %s report to %s", fmt, path, extra={"category": "io"})
