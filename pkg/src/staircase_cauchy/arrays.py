"""
Arrays on a staircase diagram, DL-dense arrays, the poset ``DL(lam)`` and its
Mobius function.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from .compositions import Partition
from .permutations import cherednik_le
from .shapes import Cell, ScPoset, StaircaseShape, staircase_corners

__all__ = [
    "ShapeArray", "hor", "vrt", "is_dl_dense", "enumerate_dl", "enumerate_arrays",
    "DLPoset", "dl_poset", "mobius",
]


@dataclass(frozen=True)
class ShapeArray:
    """A map from the cells of a shape to non-negative integers (zeros not stored)."""
    shape: StaircaseShape
    entries: tuple[tuple[Cell, int], ...]

    def __post_init__(self):
        clean = {}
        for cell, v in self.entries:
            cell = (int(cell[0]), int(cell[1]))
            if cell not in self.shape:
                raise ValueError(f"cell {cell} outside shape {self.shape.columns}")
            if v < 0:
                raise ValueError("array entries must be non-negative")
            if v:
                clean[cell] = clean.get(cell, 0) + v
        object.__setattr__(self, "entries", tuple(sorted(clean.items(), key=lambda e: (e[0][1], e[0][0]))))

    @classmethod
    def from_mapping(cls, shape: StaircaseShape, values: Mapping[Cell, int]) -> "ShapeArray":
        return cls(shape, tuple(values.items()))

    def __getitem__(self, cell: Cell) -> int:
        return dict(self.entries).get(tuple(cell), 0)

    @property
    def degree(self) -> int:
        return sum(v for _, v in self.entries)

    @cached_property
    def hor(self) -> tuple[int, ...]:
        """Row sums, length ``n_m``."""
        out = [0] * self.shape.height
        for (i, _), v in self.entries:
            out[i - 1] += v
        return tuple(out)

    @cached_property
    def vrt(self) -> tuple[int, ...]:
        """Column sums, length ``m``."""
        out = [0] * self.shape.m
        for (_, j), v in self.entries:
            out[j - 1] += v
        return tuple(out)

    def values_on(self, cells: Sequence[Cell]) -> tuple[int, ...]:
        d = dict(self.entries)
        return tuple(d.get(c, 0) for c in cells)

    def to_dict(self) -> dict:
        return {"shape": list(self.shape.columns),
                "cells": [[i, j, v] for (i, j), v in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, shape: StaircaseShape | None = None) -> "ShapeArray":
        if shape is None:
            shape = StaircaseShape(tuple(data["shape"]))
        return cls(shape, tuple(((i, j), v) for i, j, v in data["cells"]))

    @classmethod
    def from_json(cls, text: str, shape: StaircaseShape | None = None) -> "ShapeArray":
        return cls.from_dict(json.loads(text), shape)


def hor(r: ShapeArray) -> tuple[int, ...]:
    return r.hor


def vrt(r: ShapeArray) -> tuple[int, ...]:
    return r.vrt


def is_dl_dense(r: ShapeArray, poset: ScPoset | None = None) -> bool:
    poset = poset or staircase_corners(r.shape)
    if any(cell not in poset for cell, _ in r.entries):
        return False
    cs = poset.corners
    return all(r[b] <= r[a] for a in cs for b in cs if poset.le(b, a))


def enumerate_dl(s: StaircaseShape, degree: int, poset: ScPoset | None = None) -> list[ShapeArray]:
    """All DL-dense arrays of total `degree`, corners filled in column order."""
    poset = poset or staircase_corners(s)
    cs = poset.corners
    k = len(cs)
    below = [[a for a in range(t) if poset.le(cs[a], cs[t])] for t in range(k)]
    above = [[a for a in range(t) if poset.le(cs[t], cs[a])] for t in range(k)]
    vals = [0] * k
    out: list[ShapeArray] = []

    def assign(t: int, left: int) -> None:
        if t == k:
            if left == 0:
                out.append(ShapeArray(s, tuple(zip(cs, vals))))
            return
        low = max((vals[a] for a in below[t]), default=0)
        high = min([left] + [vals[a] for a in above[t]])
        for v in range(low, high + 1):
            vals[t] = v
            assign(t + 1, left - v)
        vals[t] = 0

    if k == 0:
        return [ShapeArray(s, ())] if degree == 0 else []
    assign(0, degree)
    return out


def enumerate_arrays(s: StaircaseShape, degree: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """``(hor, vrt)`` of every array of total `degree` (multisets of cells)."""
    cells = s.cells()
    h = [0] * s.height
    w = [0] * s.m

    def place(start: int, left: int):
        if left == 0:
            yield tuple(h), tuple(w)
            return
        for idx in range(start, len(cells)):
            i, j = cells[idx]
            h[i - 1] += 1
            w[j - 1] += 1
            yield from place(idx, left - 1)
            h[i - 1] -= 1
            w[j - 1] -= 1

    yield from place(0, degree)


ORIENTATIONS = ("cherednik", "dual-cherednik")


class DLPoset:
    """DL-dense arrays with entry multiset `lam`, ordered by the Cherednik order of ``vrt``.

    ``orientation="dual-cherednik"`` flips the Bruhat comparison; all elements
    share one dominant part, so this is the opposite poset. It is the order
    by inclusion of opposite Demazure modules, ``D^op(vrt B) <= D^op(vrt A)``,
    and it is the one under which the alternating expansion holds.
    """

    def __init__(self, shape: StaircaseShape, lam: Sequence[int], poset: ScPoset | None = None,
                 orientation: str = "cherednik"):
        if orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        self.orientation = orientation
        self.shape = shape
        self.sc = poset or staircase_corners(shape)
        self.lam = Partition(lam)
        if len(self.lam) > len(self.sc):
            raise ValueError(f"{tuple(self.lam)} has more parts than the {len(self.sc)} staircase corners")
        target = sorted(self.lam.padded(len(self.sc)))
        self.elements = [a for a in enumerate_dl(shape, sum(self.lam), self.sc)
                         if sorted(a.values_on(self.sc.corners)) == target]
        self.index = {a: k for k, a in enumerate(self.elements)}
        m = shape.m
        n = len(self.elements)
        # leq[b][a] is True iff elements[b] <= elements[a]
        vr = [e.vrt for e in self.elements]
        dual = orientation == "dual-cherednik"
        self.leq = [[cherednik_le(vr[b], vr[a], m, dual) for a in range(n)] for b in range(n)]
        self._mu: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def le(self, b: ShapeArray, a: ShapeArray) -> bool:
        return self.leq[self.index[b]][self.index[a]]

    def down_set(self, a: ShapeArray) -> list[ShapeArray]:
        ka = self.index[a]
        return [b for kb, b in enumerate(self.elements) if self.leq[kb][ka]]

    def _mobius(self, kb: int, ka: int) -> int:
        key = (kb, ka)
        if key not in self._mu:
            if kb == ka:
                val = 1
            else:
                val = -sum(self._mobius(kc, ka) for kc in range(len(self.elements))
                           if kc != kb and self.leq[kb][kc] and self.leq[kc][ka])
            self._mu[key] = val
        return self._mu[key]

    def mobius(self, b: ShapeArray, a: ShapeArray) -> int:
        """Standard Mobius function ``mu(b, a)`` of the interval ``[b, a]``."""
        kb, ka = self.index[b], self.index[a]
        if not self.leq[kb][ka]:
            raise ValueError("mobius needs b <= a")
        return self._mobius(kb, ka)


def dl_poset(s: StaircaseShape, lam: Sequence[int], poset: ScPoset | None = None,
             orientation: str = "cherednik") -> DLPoset:
    return DLPoset(s, lam, poset, orientation)


def mobius(p: DLPoset, b: ShapeArray, a: ShapeArray) -> int:
    return p.mobius(b, a)
