"""
Serpentines, admissibility and the half-bubble-sort map.

``serpentines(lam, d, n)`` indexes the expansion of ``key(lam) * key(0,..,0,d)``
into key polynomials. Iterating the unique sort-preserving serpentine along
the columns of a staircase shape gives ``half_bubble_sort``.
"""

from __future__ import annotations

from collections.abc import Sequence

from .compositions import Composition
from .shapes import StaircaseShape

__all__ = [
    "is_serpentine", "serpentines", "sorted_serpentine",
    "is_admissible", "iterated_chain", "half_bubble_sort",
]


def is_serpentine(mu: Sequence[int], lam: Sequence[int], d: int) -> bool:
    """Check the four defining conditions directly (quadratic, used as an oracle)."""
    n = len(lam)
    if len(mu) != n or any(m < l for m, l in zip(mu, lam)):
        return False
    if sum(mu) - sum(lam) != d:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if lam[i] <= lam[j] and mu[i] > lam[j]:
                return False
            if lam[j] < lam[i] <= mu[j] and mu[i] != lam[i]:
                return False
    return True


def serpentines(lam: Sequence[int], d: int, n: int) -> list[Composition]:
    """All ``d``-serpentines of `lam` at length `n`, in lexicographic order."""
    lam = Composition(lam).padded(n)
    if d < 0:
        raise ValueError("d must be non-negative")
    # an entry may only grow up to the smallest lam_j (j > i) with lam_i <= lam_j
    caps = []
    for i in range(n):
        cap = lam[i] + d
        for j in range(i + 1, n):
            if lam[i] <= lam[j]:
                cap = min(cap, lam[j])
        caps.append(cap)

    out: list[Composition] = []
    mu = [0] * n

    def extend(i: int, left: int) -> None:
        if i == n:
            if left == 0:
                out.append(Composition(mu))
            return
        for v in range(lam[i], min(caps[i], lam[i] + left) + 1):
            # condition 4 for all pairs (k, i) with k < i
            if any(lam[i] < lam[k] <= v and mu[k] != lam[k] for k in range(i)):
                continue
            mu[i] = v
            extend(i + 1, left - (v - lam[i]))
        mu[i] = lam[i]

    extend(0, d)
    return out


def sorted_serpentine(lam: Sequence[int], d: int, n: int) -> Composition | None:
    """The unique serpentine whose dominant part is that of ``(lam, d)``.

    Exists iff ``d == 0`` or some entry of `lam` (at length `n`) is zero.
    The new value ``d`` enters at the last zero and bubbles to the right,
    each displaced value moving to the last position holding it.
    """
    lam = Composition(lam).padded(n)
    if d == 0:
        return Composition(lam)
    zeros = [i for i in range(n) if lam[i] == 0]
    if not zeros:
        return None
    mu = list(lam)
    i = zeros[-1]
    while True:
        value = min([d] + [lam[k] for k in range(i + 1, n)])
        mu[i] = value
        if value == d:
            break
        i = max(k for k in range(n) if lam[k] == value)
    return Composition(mu)


def _padded_d(dbar: Sequence[int], s: StaircaseShape) -> tuple[int, ...]:
    dbar = Composition(dbar)
    if len(dbar) > s.m:
        raise ValueError(f"{tuple(dbar)} is longer than the {s.m} columns of {s.columns}")
    return dbar.padded(s.m)


def is_admissible(dbar: Sequence[int], s: StaircaseShape) -> bool:
    """Among the first ``k`` entries at most ``n_k`` are nonzero, for every ``k``."""
    dbar = _padded_d(dbar, s)
    nonzero = 0
    for d, n in zip(dbar, s.columns):
        nonzero += d != 0
        if nonzero > n:
            return False
    return True


def iterated_chain(dbar: Sequence[int], s: StaircaseShape) -> list[tuple[int, ...]]:
    """The chain ``mu^(1), ..., mu^(m)``, with ``mu^(j)`` of length ``n_j``."""
    d = _padded_d(dbar, s)
    if not is_admissible(d, s):
        raise ValueError(f"{d} is not admissible for shape {s.columns}")
    chain = []
    mu: tuple[int, ...] = ()
    for dj, nj in zip(d, s.columns):
        step = sorted_serpentine(mu, dj, nj)
        assert step is not None  # guaranteed by admissibility
        mu = step.padded(nj)
        chain.append(mu)
    return chain


def half_bubble_sort(dbar: Sequence[int], s: StaircaseShape) -> tuple[int, ...]:
    """``hb(dbar)``, a vector of length ``n_m``."""
    chain = iterated_chain(dbar, s)
    return chain[-1] if chain else ()
