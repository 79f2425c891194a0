"""Frieze grids on the AR quiver and matching against printed frieze figures.

Grid cell ``(delta, i)`` holds the value of the diagonal ``{i, i + delta}``.
In the printed staggered layout, row ``r`` (top row 0) holds diagonals of
length ``r + 2`` and the entry in column ``x`` (``x - r`` even) is the
diagonal ``{(x - r)/2, (x + r)/2 + 2}``.  Moving two columns right applies
the inverse AR translation.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .bhj import m_matrix
from .ccmap import rho_table
from .cluster import check_category_size
from .polygon import Dissection


class MalformedFixture(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FriezeGrid:
    N: int
    cells: np.ndarray  # shape (N - 3, N), row delta - 2

    def cell(self, delta: int, i: int) -> int:
        return int(self.cells[delta - 2, i % self.N])

    def value(self, i: int, j: int) -> int:
        """Value of the diagonal ``{i, j}``, endpoints taken mod N."""
        i %= self.N
        return self.cell((j - i) % self.N, i)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FriezeGrid) and self.N == other.N
                and np.array_equal(self.cells, other.cells))

    def layout_value(self, r: int, x: int, shift: int = 0, reflect: bool = False) -> int:
        """Entry at row ``r``, column ``x`` of the staggered layout."""
        if reflect:
            x = -x
        i = (x - r) // 2 + shift
        return self.value(i, i + r + 2)

    def to_dict(self) -> dict:
        return {"N": self.N, "n": self.N - 3, "cells": self.cells.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "FriezeGrid":
        data = json.loads(text)
        return cls(data["N"], np.array(data["cells"], dtype=np.int64))

    def to_csv(self, method: str) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["delta", "i", "j", "value", "method"])
        for delta in range(2, self.N - 1):
            for i in range(self.N):
                writer.writerow([delta, i, (i + delta) % self.N, self.cell(delta, i), method])
        return buf.getvalue()

    def render(self) -> str:
        """ASCII picture in the staggered diamond layout, one fundamental domain wide."""
        rows = self.N - 3
        width = max(len(str(int(v))) for v in self.cells.flat)
        lines = []
        for r in range(rows):
            parts = []
            for x in range(self.N + 1):
                if (x - r) % 2 == 0:
                    parts.append(str(self.layout_value(r, x)).rjust(width))
                else:
                    parts.append(" " * width)
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines)


def grid_from_values(N: int, values) -> FriezeGrid:
    """Grid from a symmetric ``values[i][j]`` lookup over vertex pairs."""
    cells = np.empty((N - 3, N), dtype=np.int64)
    for delta in range(2, N - 1):
        for i in range(N):
            cells[delta - 2, i] = values[i][(i + delta) % N]
    return FriezeGrid(N, cells)


def frieze_grid(D: Dissection, method: str = "cc") -> FriezeGrid:
    check_category_size(D.N)
    if method == "bhj":
        return grid_from_values(D.N, m_matrix(D))
    if method == "cc":
        table = rho_table(D)
        values = [[0] * D.N for _ in range(D.N)]
        for (a, b), v in table.items():
            values[a][b] = values[b][a] = v
        return grid_from_values(D.N, values)
    raise ValueError(f"unknown method {method!r}; expected 'bhj' or 'cc'")


def grid_diamonds(grid: FriezeGrid):
    """Yield ``(alpha, beta, gamma, delta)`` for every mesh, edges read as 1."""
    rows = grid.N - 3
    for r in range(rows):
        for x in range(r + 1, r + 1 + 2 * grid.N, 2):
            alpha = grid.layout_value(r, x - 1)
            delta = grid.layout_value(r, x + 1)
            beta = grid.layout_value(r - 1, x) if r > 0 else 1
            gamma = grid.layout_value(r + 1, x) if r < rows - 1 else 1
            yield alpha, beta, gamma, delta


# --- printed fixtures ----------------------------------------------------

@dataclass(frozen=True)
class FriezeFixture:
    """Rows of a printed frieze, top to bottom, in the staggered layout.

    Row ``r`` entry ``k`` sits in column ``2k + (r % 2)``.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return self.n + 3

    def positions(self):
        for r, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield r, 2 * k + (r % 2), v

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rows": [list(r) for r in self.rows]})


def parse_fixture(data: dict) -> FriezeFixture:
    try:
        n = int(data["n"])
        rows = tuple(tuple(int(v) for v in row) for row in data["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFixture(f"fixture needs integer 'n' and integer 'rows': {exc}") from None
    if n < 3:
        raise MalformedFixture(f"fixture n={n} is below 3")
    if len(rows) != n:
        raise MalformedFixture(f"fixture has {len(rows)} rows, expected n={n}")
    for r, row in enumerate(rows):
        if not row:
            raise MalformedFixture(f"row {r} is empty")
        if any(v < 1 for v in row):
            raise MalformedFixture(f"row {r} has a non-positive entry")
    return FriezeFixture(n, rows)


def load_fixture(path) -> FriezeFixture:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedFixture(f"cannot read fixture {path}: {exc}") from None
    return parse_fixture(data)


def builtin_fixture(name: str) -> FriezeFixture:
    """Transcribed figures shipped with the package: ``"figure2"`` or ``"figure3"``."""
    text = resources.files("genfrieze").joinpath("data", f"{name}.json").read_text()
    return parse_fixture(json.loads(text))


def fixture_diamonds(fixture: FriezeFixture):
    """``alpha*delta - beta*gamma`` for every complete diamond inside the fixture."""
    cells = {(r, x): v for r, x, v in fixture.positions()}
    rows = fixture.n
    out = []
    for (r, x), alpha in sorted(cells.items()):
        if (r, x + 2) not in cells:
            continue
        delta = cells[r, x + 2]
        if r > 0:
            if (r - 1, x + 1) not in cells:
                continue
            beta = cells[r - 1, x + 1]
        else:
            beta = 1
        if r < rows - 1:
            if (r + 1, x + 1) not in cells:
                continue
            gamma = cells[r + 1, x + 1]
        else:
            gamma = 1
        out.append(alpha * delta - beta * gamma)
    return out


def validate_fixture(fixture: FriezeFixture, unimodular: bool) -> None:
    """Reject transcriptions whose diamonds break the frieze rule.

    ``unimodular`` demands every diamond be exactly 1; otherwise 0 or 1.
    """
    allowed = {1} if unimodular else {0, 1}
    diffs = fixture_diamonds(fixture)
    if not diffs:
        raise MalformedFixture("fixture contains no complete diamond")
    bad = [d for d in diffs if d not in allowed]
    if bad:
        raise MalformedFixture(f"fixture diamonds {bad} outside {sorted(allowed)}")


def fixture_alignments(grid: FriezeGrid, fixture: FriezeFixture) -> list[tuple[int, bool]]:
    """All ``(shift, reflected)`` placements under which the fixture agrees with the grid."""
    if fixture.N != grid.N:
        raise MalformedFixture(f"fixture is for N={fixture.N}, grid has N={grid.N}")
    cells = list(fixture.positions())
    found = []
    for reflect in (False, True):
        for shift in range(grid.N):
            if all(grid.layout_value(r, x, shift, reflect) == v for r, x, v in cells):
                found.append((shift, reflect))
    return found


def match_fixture(grid: FriezeGrid, fixture: FriezeFixture) -> bool:
    return bool(fixture_alignments(grid, fixture))


def fixture_from_grid(grid: FriezeGrid) -> FriezeFixture:
    """The grid's fundamental strip written as a fixture (columns 0..N)."""
    rows = []
    for r in range(grid.N - 3):
        rows.append(tuple(grid.layout_value(r, x) for x in range(r % 2, grid.N + 1, 2)))
    return FriezeFixture(grid.N - 3, tuple(rows))
