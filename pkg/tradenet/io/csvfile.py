"""Strict CSV reading and writing shared by all parsers.

Files are UTF-8 (a BOM is tolerated), comma-delimited, with a header on the
first line. Cells are stripped of outer whitespace. Blank lines are skipped.
Errors carry the 1-based line number of the offending row.
"""

import csv
import io
import math
from pathlib import Path
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from tradenet.errors import IoFailure, MalformedRow, TradenetError
from tradenet.logging_setup import get_logger

logger = get_logger(__name__)

PathLike = Union[str, Path]
Row = Tuple[int, List[str]]


def located(exc: TradenetError, path: PathLike, line: int) -> TradenetError:
    """Prefix an error message with ``path:line``."""
    exc.message = f"{path}:{line}: {exc.message}"
    return exc


def read_table(path: PathLike) -> Tuple[List[str], Iterator[Row]]:
    """
    Read a CSV file into (header, rows) where each row is (line number, cells).

    Raises:
        IoFailure: If the file cannot be opened or is not UTF-8.
        MalformedRow: If the file has no header line.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except UnicodeDecodeError as exc:
        raise IoFailure(f"{path} is not valid UTF-8: {exc}") from None
    except OSError as exc:
        raise IoFailure(f"Cannot read {path}: {exc.strerror or exc}") from None

    reader = csv.reader(text.splitlines(keepends=True))
    header: List[str] = []
    try:
        for cells in reader:
            if cells and any(cell.strip() for cell in cells):
                header = [cell.strip() for cell in cells]
                break
    except csv.Error as exc:
        raise MalformedRow(str(exc), path=str(path), line=reader.line_num) from None
    if not header:
        raise MalformedRow("missing header line", path=str(path), line=1)
    logger.debug("Reading %s with header %s", path, header, extra={"category": "io"})

    def rows() -> Iterator[Row]:
        try:
            for cells in reader:
                if not cells or not any(cell.strip() for cell in cells):
                    continue
                yield reader.line_num, [cell.strip() for cell in cells]
        except csv.Error as exc:
            raise MalformedRow(str(exc), path=str(path), line=reader.line_num) from None

    return header, rows()


def expect_header(header: Sequence[str], expected: Sequence[str], path: PathLike) -> None:
    if [h.lower() for h in header] != list(expected):
        raise MalformedRow(
            f"expected header {','.join(expected)}, got {','.join(header)}",
            path=str(path),
            line=1,
        )


def expect_arity(cells: Sequence[str], arity: int, path: PathLike, line: int) -> None:
    if len(cells) != arity:
        raise MalformedRow(f"expected {arity} fields, got {len(cells)}", path=str(path), line=line)


def parse_float(cell: str, what: str, path: PathLike, line: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise MalformedRow(f"{what} {cell!r} is not a number", path=str(path), line=line) from None
    if not math.isfinite(value):
        raise MalformedRow(f"{what} {cell!r} is not a finite number", path=str(path), line=line)
    return value


def parse_int(cell: str, what: str, path: PathLike, line: int) -> int:
    try:
        return int(cell)
    except ValueError:
        raise MalformedRow(f"{what} {cell!r} is not an integer", path=str(path), line=line) from None


def parse_label(cell: str, what: str, path: PathLike, line: int) -> str:
    if not cell:
        raise MalformedRow(f"empty {what} label", path=str(path), line=line)
    return cell


def format_float(value: float) -> str:
    """Shortest text that parses back to exactly the same float."""
    return repr(float(value))


def write_table(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    """
    Write a CSV file with ``\\n`` line endings.

    Raises:
        IoFailure: If the destination cannot be written.
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise IoFailure(f"Cannot write {path}: {exc.strerror or exc}") from None
    logger.debug("Wrote %s", path, extra={"category": "io"})


def render_table(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """Same CSV text write_table would produce, returned as a string."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()
