"""
Permutations of ``1..n`` in one-line notation, Bruhat order and the Cherednik
order on compositions.

Convention: a permutation ``w`` acts on a length-``n`` vector by moving the
entry in position ``k`` to position ``w(k)``, i.e. ``(w.c)[w(k)] = c[k]``.
With this action ``(uv).c = u.(v.c)``, and the minimal coset representative
of ``c`` is the shortest ``w`` with ``w.dominant(c) == c``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

from .compositions import Composition, dominance_le, dominant_part

__all__ = [
    "Permutation", "identity", "simple_reflection", "longest_element",
    "act", "min_coset_rep", "reduced_word", "word_product",
    "bruhat_le", "bruhat_le_subword", "w0_reverse",
    "cherednik_le", "all_permutations",
]


class Permutation(tuple):
    """A bijection of ``{1, ..., n}`` as the tuple ``(w(1), ..., w(n))``."""

    def __new__(cls, images: Sequence[int]):
        self = super().__new__(cls, (int(v) for v in images))
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"{tuple(self)} is not a permutation of 1..{len(self)}")
        return self

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(k) = self(other(k))``."""
        if len(self) != len(other):
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self[other[k] - 1] for k in range(len(self))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for k, v in enumerate(self, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def length(self) -> int:
        """Number of inversions."""
        return sum(1 for a, b in itertools.combinations(self, 2) if a > b)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def simple_reflection(i: int, n: int) -> Permutation:
    """The transposition ``s_i = (i, i+1)`` in ``S_n``."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(images)


def longest_element(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def act(w: Permutation, c: Sequence[int]) -> tuple[int, ...]:
    if len(c) != len(w):
        raise ValueError("length mismatch between permutation and vector")
    out = [0] * len(c)
    for k, v in enumerate(c):
        out[w[k] - 1] = v
    return tuple(out)


def min_coset_rep(c: Sequence[int], n: int) -> Permutation:
    """Shortest ``w`` with ``act(w, dominant_part(c)) == c`` (at length `n`).

    A stable descending sort of the positions of `c` lists, in order, where
    each entry of the dominant part has to go; stability keeps equal entries
    in place relative to each other, which is what makes ``w`` minimal.
    """
    c = Composition(c).padded(n)
    order = sorted(range(n), key=lambda k: -c[k])
    return Permutation(k + 1 for k in order)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Indices ``(i_1, ..., i_k)`` with ``w = s_{i_1} ... s_{i_k}`` and ``k = length(w)``."""
    w = list(w)
    word: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                # w = (w s_i) s_i with w s_i one shorter
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def word_product(word: Sequence[int], n: int) -> Permutation:
    w = identity(n)
    for i in word:
        w = w * simple_reflection(i, n)
    return w


def bruhat_le(u: Permutation, v: Permutation) -> bool:
    """Bruhat comparison ``u <= v`` by the rank-matrix criterion."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    n = len(u)
    for i in range(1, n):
        # count of values >= j among the first i positions, for every threshold j
        cu = sorted(u[:i], reverse=True)
        cv = sorted(v[:i], reverse=True)
        if any(a > b for a, b in zip(cu, cv)):
            return False
    return True


def bruhat_le_subword(u: Permutation, v: Permutation) -> bool:
    """Bruhat comparison by brute force: ``u`` is a product of a subword of a reduced word of ``v``."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    word = reduced_word(v)
    n = len(v)
    for mask in itertools.product((False, True), repeat=len(word)):
        if word_product([i for i, keep in zip(word, mask) if keep], n) == u:
            return True
    return False


def w0_reverse(c: Sequence[int], n: int) -> Composition:
    return Composition(tuple(reversed(Composition(c).padded(n))))


def cherednik_le(a: Sequence[int], b: Sequence[int], n: int | None = None,
                 dual: bool = False) -> bool:
    """True iff ``a <= b`` in the Cherednik order.

    Larger dominant parts are larger; within one Weyl orbit the comparison is
    the Bruhat order of minimal coset representatives, so the dominant
    arrangement is the bottom of its orbit. ``dual=True`` reverses the Bruhat
    comparison (the dual Cherednik order), making the dominant arrangement the top.
    """
    if n is None:
        n = max(len(a), len(b))
    a = Composition(a).padded(n)
    b = Composition(b).padded(n)
    ap, bp = dominant_part(a), dominant_part(b)
    if not dominance_le(ap, bp):
        return False
    if ap != bp:
        return True
    if dual:
        a, b = b, a
    return bruhat_le(min_coset_rep(a, n), min_coset_rep(b, n))
