"""CSV ingestion for raw data and precomputed correlation matrices.

Data files are RFC-4180-style with a header row; ``NA`` or an empty cell
means missing. Matrix files are square numeric grids with an optional
header row (detected when any first-row cell fails to parse as a number).
"""

from __future__ import annotations

import csv
import math
from collections.abc import Sequence
from importlib.resources import files
from pathlib import Path

from .corestats import DataMatrix, make_data_matrix
from .errors import (
    EmptySelection,
    FileError,
    NotSquare,
    NotSymmetric,
    ParseError,
    TooFewRows,
)
from .linalg import SymmetricMatrix, make_symmetric

SYMMETRY_TOL = 1e-9
DIAGONAL_TOL = 1e-9
MISSING_TOKENS = {"", "NA"}


def bundled_fixture(name: str) -> Path:
    """Path of a correlation-matrix CSV shipped with the package."""
    return Path(str(files("mcor").joinpath("fixtures", name)))


def _read_cells(path) -> list[list[str]]:
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            rows = [[cell.strip() for cell in row] for row in csv.reader(handle)]
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise FileError(f"{path} is not valid UTF-8: {exc}") from exc
    # Drop blank lines only; a line of delimiters like ",," is still a row.
    return [row for row in rows if row != [] and row != [""]]


def _parse_number(token: str) -> float | None:
    try:
        value = float(token)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def read_csv_data(
    path,
    columns: Sequence[str] | None = None,
    drop_na: bool = False,
) -> DataMatrix:
    """Load a header-plus-rows CSV into a DataMatrix.

    With ``columns`` unset, every column holding at least one numeric cell
    is selected. ``drop_na=True`` removes rows with a missing or
    unparseable cell in any selected column (listwise deletion);
    ``drop_na=False`` makes such a cell a hard error naming its row and
    column. Row numbers in errors count the header as row 1.
    """
    cells = _read_cells(path)
    if not cells:
        raise ParseError(f"{path} is empty")
    header = cells[0]
    body = cells[1:]
    width = len(header)
    for offset, row in enumerate(body):
        if len(row) != width:
            raise ParseError(
                f"row {offset + 2}: expected {width} cells, found {len(row)}"
            )
    if columns is not None:
        missing = [name for name in columns if name not in header]
        if missing:
            raise EmptySelection(
                f"column(s) not in header: {', '.join(sorted(missing))}"
            )
        selected = [header.index(name) for name in columns]
    else:
        selected = [
            j
            for j in range(width)
            if any(_parse_number(row[j]) is not None for row in body)
        ]
    if not selected:
        raise EmptySelection("no numeric columns to select")

    rows = []
    for offset, raw in enumerate(body):
        parsed = []
        for j in selected:
            value = _parse_number(raw[j])
            if value is None:
                if drop_na:
                    parsed = None
                    break
                raise ParseError(
                    f"row {offset + 2}, column {header[j]}: "
                    f"cannot use cell {raw[j]!r}"
                )
            parsed.append(value)
        if parsed is not None:
            rows.append(tuple(parsed))
    if len(rows) < 2:
        raise TooFewRows(f"{len(rows)} usable rows after deletion, need at least 2")
    return make_data_matrix(rows, [header[j] for j in selected])


def _numeric_grid(path) -> list[list[float]]:
    """Square numeric block of a matrix CSV, optional header stripped."""
    cells = _read_cells(path)
    if not cells:
        raise ParseError(f"{path} is empty")
    if any(_parse_number(token) is None for token in cells[0]):
        cells = cells[1:]
        if not cells:
            raise ParseError(f"{path} has a header but no rows")
    grid = []
    for offset, row in enumerate(cells):
        values = []
        for j, token in enumerate(row):
            value = _parse_number(token)
            if value is None:
                raise ParseError(
                    f"row {offset + 1}, column {j + 1}: cannot parse {token!r}"
                )
            values.append(value)
        grid.append(values)
    width = len(grid[0])
    for offset, row in enumerate(grid):
        if len(row) != width:
            raise ParseError(
                f"row {offset + 1}: expected {width} cells, found {len(row)}"
            )
    if len(grid) != width:
        raise NotSquare(f"{len(grid)} rows x {width} columns")
    return grid


def read_matrix(path) -> SymmetricMatrix:
    """Load a correlation-matrix CSV.

    Asymmetry beyond 1e-9 is an error naming the worst entry pair; within
    tolerance the two triangles are averaged so the result is exactly
    symmetric.
    """
    grid = _numeric_grid(path)
    d = len(grid)
    worst = 0.0
    worst_at = (0, 0)
    for i in range(d):
        for j in range(i + 1, d):
            gap = abs(grid[i][j] - grid[j][i])
            if gap > worst:
                worst = gap
                worst_at = (i, j)
    if worst > SYMMETRY_TOL:
        i, j = worst_at
        raise NotSymmetric(
            f"entries ({i + 1},{j + 1}) = {grid[i][j]!r} and "
            f"({j + 1},{i + 1}) = {grid[j][i]!r} differ by {worst:.3e}"
        )
    tri = []
    for i in range(d):
        for j in range(i):
            tri.append(0.5 * (grid[i][j] + grid[j][i]))
        tri.append(grid[i][i])
    return make_symmetric(d, tri)


def sniff_kind(path) -> str:
    """Heuristic for compare inputs: ``"matrix"`` when the file is a
    square numeric grid with a unit diagonal (within 1e-9), else
    ``"data"``."""
    try:
        grid = _numeric_grid(path)
    except (ParseError, NotSquare):
        return "data"
    if all(abs(grid[i][i] - 1.0) <= DIAGONAL_TOL for i in range(len(grid))):
        return "matrix"
    return "data"
