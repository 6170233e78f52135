"""
Exact sparse polynomials in two alphabets ``x_1..x_nx`` and ``y_1..y_ny``,
isobaric divided differences, key polynomials, Demazure atoms and Schur
polynomials.

Terms are stored as ``{exponents: coefficient}`` where ``exponents`` is the
x-exponent vector followed by the y-exponent vector. Python integers are
unbounded, so no overflow checks are needed.
"""

from __future__ import annotations

import json
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from functools import lru_cache

from .compositions import Composition, dominant_part
from .permutations import min_coset_rep, reduced_word

__all__ = [
    "BigradedPolynomial", "x_var", "y_var",
    "demazure_pi", "demazure_pibar",
    "key_polynomial", "demazure_atom", "schur", "semistandard_tableaux",
    "opposite_key", "opposite_atom",
]

Monomial = tuple[int, ...]


class AlphabetMismatch(ValueError):
    pass


def _common(a: int, b: int) -> int:
    # an empty alphabet is compatible with any length: the polynomial is constant in it
    if a == b or b == 0:
        return a
    if a == 0:
        return b
    raise AlphabetMismatch(f"alphabet lengths {a} and {b} differ")


class BigradedPolynomial:
    __slots__ = ("nx", "ny", "terms")

    def __init__(self, nx: int = 0, ny: int = 0,
                 terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        self.nx = nx
        self.ny = ny
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nx + ny or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for alphabets ({nx}, {ny})")
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}

    # construction

    @classmethod
    def constant(cls, c: int, nx: int = 0, ny: int = 0) -> "BigradedPolynomial":
        return cls(nx, ny, {(0,) * (nx + ny): c})

    @classmethod
    def monomial(cls, xexp: Sequence[int] = (), yexp: Sequence[int] = (),
                 coeff: int = 1) -> "BigradedPolynomial":
        return cls(len(xexp), len(yexp), {tuple(xexp) + tuple(yexp): coeff})

    def lift(self, nx: int, ny: int) -> "BigradedPolynomial":
        """View in larger alphabets; only allowed from an empty alphabet."""
        if (nx, ny) == (self.nx, self.ny):
            return self
        if self.nx not in (0, nx) or self.ny not in (0, ny):
            raise AlphabetMismatch(f"cannot view ({self.nx}, {self.ny}) as ({nx}, {ny})")
        out = {}
        for mono, c in self.terms.items():
            xs = mono[:self.nx] if self.nx else (0,) * nx
            ys = mono[self.nx:] if self.ny else (0,) * ny
            out[xs + ys] = c
        return BigradedPolynomial(nx, ny, out)

    # ring operations

    def _align(self, other: "BigradedPolynomial"):
        nx = _common(self.nx, other.nx)
        ny = _common(self.ny, other.ny)
        return self.lift(nx, ny), other.lift(nx, ny), nx, ny

    def __add__(self, other):
        if isinstance(other, int):
            other = BigradedPolynomial.constant(other, self.nx, self.ny)
        a, b, nx, ny = self._align(other)
        out = dict(a.terms)
        for m, c in b.terms.items():
            out[m] = out.get(m, 0) + c
        return BigradedPolynomial(nx, ny, out)

    __radd__ = __add__

    def __neg__(self):
        return BigradedPolynomial(self.nx, self.ny, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "BigradedPolynomial":
        return BigradedPolynomial(self.nx, self.ny, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b, nx, ny = self._align(other)
        out: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                out[tuple(e + f for e, f in zip(m1, m2))] += c1 * c2
        return BigradedPolynomial(nx, ny, out)

    __rmul__ = __mul__

    def tensor(self, other: "BigradedPolynomial") -> "BigradedPolynomial":
        """Product of a pure-x polynomial with a pure-y polynomial."""
        if self.ny or other.nx:
            raise AlphabetMismatch("tensor expects an x-polynomial times a y-polynomial")
        return BigradedPolynomial(self.nx, other.ny, {
            m1 + m2: c1 * c2 for m1, c1 in self.terms.items() for m2, c2 in other.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = BigradedPolynomial.constant(other, self.nx, self.ny)
        if not isinstance(other, BigradedPolynomial):
            return NotImplemented
        try:
            a, b, _, _ = self._align(other)
        except AlphabetMismatch:
            return False
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.nx, self.ny, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    def coefficient(self, xexp: Sequence[int] = (), yexp: Sequence[int] = ()) -> int:
        return self.terms.get(tuple(xexp) + tuple(yexp), 0)

    # variable manipulations

    def _offset(self, alphabet: str) -> tuple[int, int]:
        if alphabet == "x":
            return 0, self.nx
        if alphabet == "y":
            return self.nx, self.ny
        raise ValueError(f"unknown alphabet {alphabet!r}")

    def permute_variables(self, perm: Sequence[int], alphabet: str = "x") -> "BigradedPolynomial":
        """Substitute variable ``k`` by variable ``perm[k-1]`` (1-based) within one alphabet."""
        off, size = self._offset(alphabet)
        if sorted(perm) != list(range(1, size + 1)):
            raise ValueError("not a permutation of the alphabet")
        out = {}
        for mono, c in self.terms.items():
            new = list(mono)
            for k in range(size):
                new[off + perm[k] - 1] = mono[off + k]
            out[tuple(new)] = c
        return BigradedPolynomial(self.nx, self.ny, out)

    def reverse_variables(self, alphabet: str = "x") -> "BigradedPolynomial":
        _, size = self._offset(alphabet)
        return self.permute_variables(list(range(size, 0, -1)), alphabet)

    def swap(self, i: int, alphabet: str = "x") -> "BigradedPolynomial":
        _, size = self._offset(alphabet)
        perm = list(range(1, size + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return self.permute_variables(perm, alphabet)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(sum(m[:self.nx]), sum(m[self.nx:])) for m in self.terms}

    # serialization

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def to_list(self) -> list[dict]:
        return [{"x": list(m[:self.nx]), "y": list(m[self.nx:]), "c": c}
                for m, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, data: list[dict], nx: int | None = None,
                  ny: int | None = None) -> "BigradedPolynomial":
        if data:
            nx = len(data[0]["x"]) if nx is None else nx
            ny = len(data[0]["y"]) if ny is None else ny
        return cls(nx or 0, ny or 0, [(tuple(t["x"]) + tuple(t["y"]), t["c"]) for t in data])

    @classmethod
    def from_json(cls, text: str, nx: int | None = None, ny: int | None = None):
        return cls.from_list(json.loads(text), nx, ny)

    def to_tsv(self) -> str:
        lines = []
        for m, c in self.sorted_terms():
            xs = ",".join(map(str, m[:self.nx]))
            ys = ",".join(map(str, m[self.nx:]))
            lines.append(f"{xs}\t{ys}\t{c}")
        return "\n".join(lines)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for k, e in enumerate(m):
                name = f"x{k + 1}" if k < self.nx else f"y{k - self.nx + 1}"
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BigradedPolynomial(nx={self.nx}, ny={self.ny}, {self})"


def x_var(k: int, nx: int, ny: int = 0) -> BigradedPolynomial:
    e = [0] * (nx + ny)
    e[k - 1] = 1
    return BigradedPolynomial(nx, ny, {tuple(e): 1})


def y_var(k: int, ny: int, nx: int = 0) -> BigradedPolynomial:
    e = [0] * (nx + ny)
    e[nx + k - 1] = 1
    return BigradedPolynomial(nx, ny, {tuple(e): 1})


def demazure_pi(p: BigradedPolynomial, i: int, alphabet: str = "x") -> BigradedPolynomial:
    """Isobaric divided difference ``(x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})``.

    Applied monomial by monomial on the exponent pair ``(a, b)`` of
    ``(x_i, x_{i+1})``.
    """
    off, size = p._offset(alphabet)
    if not 1 <= i < size:
        raise IndexError(f"pi_{i} needs 1 <= i < {size}")
    u, v = off + i - 1, off + i
    out: dict[Monomial, int] = defaultdict(int)
    for mono, c in p.terms.items():
        a, b = mono[u], mono[v]
        if a >= b:
            js, sign = range(b, a + 1), 1
        elif a + 1 == b:
            continue
        else:
            js, sign = range(a + 1, b), -1
        m = list(mono)
        for j in js:
            m[u], m[v] = j, a + b - j
            out[tuple(m)] += sign * c
    return BigradedPolynomial(p.nx, p.ny, out)


def demazure_pibar(p: BigradedPolynomial, i: int, alphabet: str = "x") -> BigradedPolynomial:
    """``pi_i - id``."""
    return demazure_pi(p, i, alphabet) - p


def _as_alphabet(xexp: Sequence[int], alphabet: str) -> BigradedPolynomial:
    if alphabet == "x":
        return BigradedPolynomial.monomial(xexp, ())
    if alphabet == "y":
        return BigradedPolynomial.monomial((), yexp=xexp)
    raise ValueError(f"unknown alphabet {alphabet!r}")


@lru_cache(maxsize=None)
def _key_or_atom(lam: tuple[int, ...], alphabet: str, atom: bool) -> BigradedPolynomial:
    n = len(lam)
    op = demazure_pibar if atom else demazure_pi
    poly = _as_alphabet(dominant_part(lam).padded(n), alphabet)
    for i in reversed(reduced_word(min_coset_rep(lam, n))):
        poly = op(poly, i, alphabet)
    return poly


def key_polynomial(lam: Sequence[int], n: int, alphabet: str = "x") -> BigradedPolynomial:
    """Key polynomial of `lam` in ``n`` variables of `alphabet`."""
    return _key_or_atom(Composition(lam).padded(n), alphabet, False)


def demazure_atom(lam: Sequence[int], n: int, alphabet: str = "x") -> BigradedPolynomial:
    return _key_or_atom(Composition(lam).padded(n), alphabet, True)


def opposite_key(lam: Sequence[int], m: int, alphabet: str = "y") -> BigradedPolynomial:
    """``kappa^lam(y_1..y_m) = kappa_{reverse(lam)}(y_m..y_1)``."""
    rev = tuple(reversed(Composition(lam).padded(m)))
    return key_polynomial(rev, m, alphabet).reverse_variables(alphabet)


def opposite_atom(lam: Sequence[int], m: int, alphabet: str = "y") -> BigradedPolynomial:
    rev = tuple(reversed(Composition(lam).padded(m)))
    return demazure_atom(rev, m, alphabet).reverse_variables(alphabet)


def semistandard_tableaux(shape: Sequence[int], n: int):
    """Yield semistandard tableaux (tuple of rows) of `shape` with entries in ``1..n``."""
    shape = [p for p in shape if p]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(filling[(r, c)] for c in range(length))
                        for r, length in enumerate(shape))
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = max(low, filling[(r, c - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        for v in range(low, n + 1):
            filling[(r, c)] = v
            yield from fill(k + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def schur(lam: Sequence[int], n: int, alphabet: str = "x") -> BigradedPolynomial:
    """Schur polynomial as the content generating function of semistandard tableaux."""
    counts: dict[Monomial, int] = defaultdict(int)
    for t in semistandard_tableaux(lam, n):
        e = [0] * n
        for row in t:
            for v in row:
                e[v - 1] += 1
        counts[tuple(e)] += 1
    if alphabet == "x":
        return BigradedPolynomial(n, 0, counts)
    if alphabet == "y":
        return BigradedPolynomial(0, n, counts)
    raise ValueError(f"unknown alphabet {alphabet!r}")
