"""Trade table formats.

Long format (canonical): ``year,exporter,importer,value``, one row per
positive flow, values in thousands of current US dollars.

Wide format: one file per year shaped like a printed trade table. The first
header cell is empty or ``exporter``; the other header cells are importers;
each row is an exporter followed by its flows.
"""

import re
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np

from tradenet.constants import TRADE_LONG_HEADER, WIDE_CORNER_LABELS
from tradenet.errors import (
    DuplicateCountry,
    DuplicateFlow,
    IndexMismatch,
    IoFailure,
    LabelMismatch,
    MalformedRow,
    NegativeValue,
    SelfLoop,
)
from tradenet.io.csvfile import (
    PathLike,
    expect_arity,
    expect_header,
    format_float,
    located,
    parse_float,
    parse_int,
    parse_label,
    read_table,
    write_table,
)
from tradenet.logging_setup import get_logger
from tradenet.network import CountryIndex, TradeMatrix, build_trade_matrix

logger = get_logger(__name__)

_YEAR_FILE = re.compile(r"^\d{4}$")


def _check_flow(value: float, exporter: str, importer: str, path: PathLike, line: int) -> None:
    if value < 0:
        raise located(NegativeValue(f"flow {exporter} -> {importer} is negative ({value!r})"), path, line)
    if exporter == importer and value > 0:
        raise located(SelfLoop(f"{exporter} reports {value!r} of trade with itself"), path, line)


def parse_trade_long(path: PathLike) -> List[TradeMatrix]:
    """
    One TradeMatrix per distinct year, all over the sorted union of labels.

    Raises:
        MalformedRow, NegativeValue, SelfLoop, DuplicateFlow, IoFailure
    """
    header, rows = read_table(path)
    expect_header(header, TRADE_LONG_HEADER, path)

    by_year: Dict[int, List[Tuple[str, str, float]]] = defaultdict(list)
    seen: Dict[Tuple[int, str, str], int] = {}
    labels = set()
    for line, cells in rows:
        expect_arity(cells, 4, path, line)
        year = parse_int(cells[0], "year", path, line)
        exporter = parse_label(cells[1], "exporter", path, line)
        importer = parse_label(cells[2], "importer", path, line)
        value = parse_float(cells[3], "value", path, line)
        _check_flow(value, exporter, importer, path, line)
        key = (year, exporter, importer)
        if key in seen:
            raise located(
                DuplicateFlow(f"flow {exporter} -> {importer} in {year} already given on line {seen[key]}"),
                path,
                line,
            )
        seen[key] = line
        labels.update((exporter, importer))
        by_year[year].append((exporter, importer, value))

    index = CountryIndex.from_labels(labels)
    matrices = [build_trade_matrix(by_year[year], index, year) for year in sorted(by_year)]
    logger.info(
        "Parsed %d yearly trade matrices over %d countries from %s",
        len(matrices),
        index.size,
        path,
        extra={"category": "io"},
    )
    return matrices


def parse_trade_wide(path: PathLike, year: int) -> TradeMatrix:
    """
    Parse a printed-style trade grid. Country order follows the header.

    Raises:
        LabelMismatch: If row labels and column labels differ.
        MalformedRow, DuplicateCountry, NegativeValue, SelfLoop, IoFailure
    """
    header, rows = read_table(path)
    if header[0].lower() not in WIDE_CORNER_LABELS:
        raise MalformedRow(
            f"first header cell must be empty or 'exporter', got {header[0]!r}", path=str(path), line=1
        )
    columns = [parse_label(cell, "importer", path, 1) for cell in header[1:]]
    if len(set(columns)) != len(columns):
        duplicates = sorted({c for c in columns if columns.count(c) > 1})
        raise located(DuplicateCountry(f"importer columns repeat: {', '.join(duplicates)}"), path, 1)
    index = CountryIndex(tuple(columns))
    n = index.size

    flows = np.zeros((n, n), dtype=float)
    row_labels: Dict[str, int] = {}
    for line, cells in rows:
        expect_arity(cells, n + 1, path, line)
        exporter = parse_label(cells[0], "exporter", path, line)
        if exporter in row_labels:
            raise located(
                DuplicateCountry(f"exporter {exporter!r} already given on line {row_labels[exporter]}"),
                path,
                line,
            )
        row_labels[exporter] = line
        if exporter not in index:
            raise located(LabelMismatch(f"row {exporter!r} has no matching column"), path, line)
        i = index.position(exporter)
        for j, (importer, cell) in enumerate(zip(columns, cells[1:])):
            value = parse_float(cell, f"flow {exporter} -> {importer}", path, line)
            _check_flow(value, exporter, importer, path, line)
            flows[i, j] = value

    missing = [c for c in columns if c not in row_labels]
    if missing:
        raise LabelMismatch(f"{path}: columns without a row: {', '.join(missing)}")
    return TradeMatrix(year, index, flows)


def load_trade_source(path: PathLike) -> List[TradeMatrix]:
    """
    Load a long-format file, or a directory of ``<year>.csv`` wide files.

    Wide files must cover the same countries; they are reindexed to the sorted
    label order so every year shares one index.

    Raises:
        IoFailure: If the path does not exist or a directory holds no year files.
        IndexMismatch: If wide files cover different countries.
    """
    path = Path(path)
    if path.is_file():
        return parse_trade_long(path)
    if not path.is_dir():
        raise IoFailure(f"Trade source {path} does not exist")

    files = sorted(p for p in path.glob("*.csv") if _YEAR_FILE.match(p.stem))
    if not files:
        raise IoFailure(f"No <year>.csv files in {path}")
    matrices = [parse_trade_wide(p, int(p.stem)) for p in files]
    index = CountryIndex.from_labels(matrices[0].countries.names)
    for m in matrices:
        if set(m.countries.names) != set(index.names):
            raise IndexMismatch(f"{path}: the {m.year} table covers different countries")
    return [m.reindexed(index) for m in matrices]


def emit_trade_long(matrices: Sequence[TradeMatrix], path: PathLike) -> None:
    """Write matrices as long rows; zero flows are omitted."""
    rows = []
    for m in sorted(matrices, key=lambda m: m.year):
        names = m.countries.names
        for i, j in zip(*np.nonzero(m.flows)):
            rows.append((m.year, names[i], names[j], format_float(m.flows[i, j])))
    write_table(path, TRADE_LONG_HEADER, rows)


def emit_trade_wide(matrix: TradeMatrix, path: PathLike) -> None:
    """Write one matrix as a grid in its own country order."""
    names = matrix.countries.names
    rows = [
        (names[i], *(format_float(v) for v in matrix.flows[i]))
        for i in range(len(names))
    ]
    write_table(path, ("exporter", *names), rows)
