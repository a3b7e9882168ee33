"""File formats: trade tables, panels, group files, fixtures, reports, manifests."""

from tradenet.io.manifest import DatasetManifest
from tradenet.io.panels import (
    FixtureRow,
    fixture_kind,
    parse_fixture,
    parse_groups,
    parse_series,
    values_for_year,
)
from tradenet.io.reports import (
    dumps_report,
    emit_report,
    load_report,
    report_from_dict,
    report_to_dict,
    tool_version,
)
from tradenet.io.trade import (
    emit_trade_long,
    emit_trade_wide,
    load_trade_source,
    parse_trade_long,
    parse_trade_wide,
)

__all__ = [
    "DatasetManifest",
    "FixtureRow",
    "dumps_report",
    "emit_report",
    "emit_trade_long",
    "emit_trade_wide",
    "fixture_kind",
    "load_report",
    "load_trade_source",
    "parse_fixture",
    "parse_groups",
    "parse_series",
    "parse_trade_long",
    "parse_trade_wide",
    "report_from_dict",
    "report_to_dict",
    "tool_version",
    "values_for_year",
]
