"""
Compositions and partitions.

A composition is a finite vector of non-negative integers. Two compositions
that differ only by trailing zeros are the same object, so the canonical
form drops them; code that needs a fixed length asks for ``padded(n)``.

>>> Composition((3, 0, 3, 1, 0)) == Composition((3, 0, 3, 1))
True
>>> dominant_part((3, 0, 3, 1))
Partition((3, 3, 1))
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence

__all__ = [
    "Composition", "Partition",
    "dominant_part", "dominance_le", "weight",
    "compositions_of", "bounded_compositions", "partitions_of",
    "append_part",
]


def _strip(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative entry in {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


class Composition(tuple):
    """Vector of non-negative integers, stored without trailing zeros."""

    def __new__(cls, parts: Iterable[int] = ()):
        return super().__new__(cls, _strip(parts))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"

    def padded(self, n: int) -> tuple[int, ...]:
        """The entries as a plain tuple of length exactly `n`."""
        if len(self) > n:
            raise ValueError(f"{tuple(self)} does not fit in length {n}")
        return tuple(self) + (0,) * (n - len(self))

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> "Composition":
        return cls(json.loads(text))


class Partition(Composition):
    """A non-increasing composition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise ValueError(f"{tuple(self)} is not non-increasing")
        return self


def dominant_part(c: Iterable[int]) -> Partition:
    """Non-increasing reordering of `c`."""
    return Partition(sorted(c, reverse=True))


def weight(c: Iterable[int]) -> int:
    return sum(c)


def dominance_le(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a <= b`` in dominance order (equal weight, prefix sums of b dominate)."""
    if sum(a) != sum(b):
        return False
    n = max(len(a), len(b))
    sa = sb = 0
    for k in range(n):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa > sb:
            return False
    return True


def append_part(c: Iterable[int], d: int) -> Composition:
    """The composition ``(c, d)``: `d` written right after the last nonzero entry of `c`."""
    return Composition(tuple(Composition(c)) + (d,))


def compositions_of(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `length` non-negative integers summing to `total`, lexicographically decreasing."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions_of(total - first, length - 1):
            yield (first,) + rest


def bounded_compositions(length: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `length` entries in ``0..bound``."""
    if length == 0:
        yield ()
        return
    for rest in bounded_compositions(length - 1, bound):
        for last in range(bound + 1):
            yield rest + (last,)


def partitions_of(total: int, max_parts: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of `total` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    rest_parts = None if max_parts is None else max_parts - 1
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, rest_parts, first):
            yield Partition((first,) + tuple(rest))
