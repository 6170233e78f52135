"""
Staircase shapes and the poset of staircase corners.

A shape ``(n_1 <= ... <= n_m)`` is the diagram of cells ``(i, j)`` with
``1 <= j <= m`` and ``1 <= i <= n_j``: columns hang from the top row and get
longer to the right. Cells are ``(row, column)`` pairs, 1-based.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

__all__ = [
    "Cell", "StaircaseShape", "ScPoset",
    "validate", "parse_shape", "transpose", "transpose_cell", "erase_hook",
    "staircase_corners", "corners_by_single_removal", "sc_le",
]

Cell = tuple[int, int]


@dataclass(frozen=True)
class StaircaseShape:
    columns: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(int(c) for c in self.columns))
        cols = self.columns
        if any(c <= 0 for c in cols):
            raise ValueError(f"column lengths must be positive: {cols}")
        if any(cols[k] > cols[k + 1] for k in range(len(cols) - 1)):
            raise ValueError(f"column lengths must be non-decreasing: {cols}")

    @property
    def m(self) -> int:
        """Number of columns."""
        return len(self.columns)

    @property
    def height(self) -> int:
        """Number of rows, ``n_m``."""
        return self.columns[-1] if self.columns else 0

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= j <= self.m and 1 <= i <= self.columns[j - 1]

    def __len__(self) -> int:
        return sum(self.columns)

    def cells(self) -> list[Cell]:
        """All cells, column by column, top to bottom."""
        return [(i, j) for j, n in enumerate(self.columns, start=1) for i in range(1, n + 1)]

    def row_length(self, i: int) -> int:
        return sum(1 for n in self.columns if n >= i)

    def column_blocks(self) -> list[list[int]]:
        """Maximal runs of columns with equal length."""
        return _runs(range(1, self.m + 1), lambda j: self.columns[j - 1])

    def row_blocks(self) -> list[list[int]]:
        """Maximal runs of rows with equal length."""
        return _runs(range(1, self.height + 1), self.row_length)

    def __str__(self) -> str:
        return ",".join(map(str, self.columns))


def _runs(items, key) -> list[list[int]]:
    runs: list[list[int]] = []
    for x in items:
        if runs and key(runs[-1][-1]) == key(x):
            runs[-1].append(x)
        else:
            runs.append([x])
    return runs


def validate(columns: Iterable[int]) -> StaircaseShape:
    return StaircaseShape(tuple(columns))


def parse_shape(text: str) -> StaircaseShape:
    """Parse ``"2,4,4,4,5,5"``."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        return StaircaseShape(tuple(int(p) for p in parts))
    except ValueError as exc:
        raise ValueError(f"bad shape {text!r}: {exc}") from None


def transpose(s: StaircaseShape) -> StaircaseShape:
    """Row lengths of `s` in non-decreasing order: ``n^t_k = #{j : n_j >= n_m + 1 - k}``."""
    h = s.height
    return StaircaseShape(tuple(s.row_length(h + 1 - k) for k in range(1, h + 1)))


def transpose_cell(s: StaircaseShape, cell: Cell) -> Cell:
    """Image of `cell` in ``transpose(s)``; row ``i`` becomes column ``n_m + 1 - i``."""
    i, j = cell
    return (s.m + 1 - j, s.height + 1 - i)


def erase_hook(s: StaircaseShape, cell: Cell) -> tuple[StaircaseShape, dict[Cell, Cell]]:
    """Delete the row and column through `cell`.

    Returns the remaining shape and the relabelling of the surviving cells.
    Columns left empty are dropped (they can only occur on the left).
    """
    if cell not in s:
        raise ValueError(f"cell {cell} is not in shape {s.columns}")
    i, j = cell
    n = s.columns
    new = []
    for k in range(1, s.m):
        if k < j:
            new.append(n[k - 1] if n[k - 1] < i else n[k - 1] - 1)
        else:
            new.append(n[k] - 1)
    empty = sum(1 for c in new if c == 0)
    relabel: dict[Cell, Cell] = {}
    for (a, b) in s.cells():
        if a == i or b == j:
            continue
        na = a if a < i else a - 1
        nb = b if b < j else b - 1
        relabel[(a, b)] = (na, nb - empty)
    return StaircaseShape(tuple(c for c in new if c > 0)), relabel


@dataclass(frozen=True)
class ScPoset:
    """Staircase corners of a shape with the down-left order."""
    shape: StaircaseShape
    corners: tuple[Cell, ...]  # sorted by column
    _hasse: tuple[tuple[Cell, Cell], ...] = field(default=(), repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.corners)

    def __iter__(self):
        return iter(self.corners)

    def __contains__(self, cell) -> bool:
        return cell in self.corners

    def le(self, b: Cell, a: Cell) -> bool:
        """``b <= a``: `a` lies weakly below and weakly left of `b`."""
        return a[0] >= b[0] and a[1] <= b[1]

    def column_of_row(self) -> dict[int, int]:
        return {i: j for i, j in self.corners}

    def row_of_column(self) -> dict[int, int]:
        return {j: i for i, j in self.corners}

    def hasse_edges(self) -> list[tuple[Cell, Cell]]:
        """Cover relations as ``(larger, smaller)`` pairs."""
        edges = []
        cs = self.corners
        for a in cs:
            for b in cs:
                if a == b or not self.le(b, a):
                    continue
                if not any(c not in (a, b) and self.le(b, c) and self.le(c, a) for c in cs):
                    edges.append((a, b))
        return sorted(edges, key=lambda e: (e[0][1], e[1][1]))

    def up_set(self, s: Cell) -> list[Cell]:
        return [t for t in self.corners if self.le(s, t)]

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape.columns),
            "corners": [list(c) for c in self.corners],
            "hasse_edges": [[list(a), list(b)] for a, b in self.hasse_edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ScPoset":
        shape = StaircaseShape(tuple(data["shape"]))
        corners = tuple(sorted((tuple(c) for c in data["corners"]), key=lambda c: c[1]))
        for c in corners:
            if c not in shape:
                raise ValueError(f"corner {c} outside shape")
        return cls(shape, corners)

    @classmethod
    def from_json(cls, text: str) -> "ScPoset":
        return cls.from_dict(json.loads(text))


def _residual_corners(columns: Sequence[int], rows: set[int], cols: list[int]) -> list[Cell]:
    """Corners of the diagram left after deleting some rows and columns, in original labels."""
    out = []
    prev = 0
    for j in cols:
        cells = [i for i in rows if i <= columns[j - 1]]
        if len(cells) > prev:
            out.append((max(cells), j))
        prev = len(cells)
    return out


def staircase_corners(s: StaircaseShape) -> ScPoset:
    """Staircase corners: strip the thin hooks of all current corners, repeat until empty."""
    rows = set(range(1, s.height + 1))
    cols = list(range(1, s.m + 1))
    found: list[Cell] = []
    while True:
        batch = _residual_corners(s.columns, rows, cols)
        if not batch:
            break
        found.extend(batch)
        rows -= {i for i, _ in batch}
        removed = {j for _, j in batch}
        cols = [j for j in cols if j not in removed]
    return ScPoset(s, tuple(sorted(found, key=lambda c: c[1])))


def corners_by_single_removal(s: StaircaseShape, rng: random.Random | None = None) -> ScPoset:
    """Same set, built by removing one randomly chosen corner's hook at a time."""
    rng = rng or random.Random(0)
    rows = set(range(1, s.height + 1))
    cols = list(range(1, s.m + 1))
    found: list[Cell] = []
    while True:
        batch = _residual_corners(s.columns, rows, cols)
        if not batch:
            break
        i, j = rng.choice(batch)
        found.append((i, j))
        rows.discard(i)
        cols.remove(j)
    return ScPoset(s, tuple(sorted(found, key=lambda c: c[1])))


def sc_le(p: ScPoset, a: Cell, b: Cell) -> bool:
    """True iff ``b <= a`` in the corner poset `p`."""
    for c in (a, b):
        if c not in p:
            raise ValueError(f"{c} is not a staircase corner of {p.shape.columns}")
    return p.le(b, a)
