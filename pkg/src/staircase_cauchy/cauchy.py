"""
Degree-by-degree verification of the Cauchy-type expansions of
``prod_{(i,j) in Y} 1 / (1 - x_i y_j)``.

Each expansion is a sum of products ``f(x) g(y)``; in a fixed total degree
``N`` both sides are finite, so they are compared coefficient by coefficient
with no truncation. The left side is computed independently of the
divided-difference machinery, by enumerating multisets of cells.
"""

from __future__ import annotations

import json
import time
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import asdict, dataclass, field

from .arrays import DLPoset, ShapeArray, enumerate_arrays, enumerate_dl
from .compositions import bounded_compositions, compositions_of, partitions_of
from .polynomials import BigradedPolynomial, key_polynomial, opposite_atom, opposite_key
from .serpentines import half_bubble_sort, is_admissible
from .shapes import StaircaseShape, staircase_corners

__all__ = [
    "IDENTITIES", "lhs_degree", "admissible_compositions",
    "right_terms", "left_terms", "alternating_terms",
    "rhs_right", "rhs_left", "rhs_alternating",
    "vdk_char", "VdkChar", "agl_shape", "agl_prime",
    "DEFAULT_ORIENTATION", "DegreeStatus", "VerificationReport", "verify", "verify_vdk", "verify_agl",
]

IDENTITIES = ("right", "left", "alternating")

# the order on DL(lam) under which the alternating expansion and the Mobius
# form of the van der Kallen character hold
DEFAULT_ORIENTATION = "dual-cherednik"

Term = tuple[str, BigradedPolynomial]


def lhs_degree(s: StaircaseShape, degree: int) -> BigradedPolynomial:
    """Degree-`degree` part of the product, one monomial per array of that degree."""
    counts: dict[tuple[int, ...], int] = defaultdict(int)
    for h, v in enumerate_arrays(s, degree):
        counts[h + v] += 1
    return BigradedPolynomial(s.height, s.m, counts)


def admissible_compositions(s: StaircaseShape, degree: int) -> list[tuple[int, ...]]:
    return [d for d in compositions_of(degree, s.m) if is_admissible(d, s)]


def _sum_terms(terms: Iterable[Term], nx: int, ny: int) -> BigradedPolynomial:
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for _, poly in terms:
        for mono, c in poly.terms.items():
            acc[mono] += c
    return BigradedPolynomial(nx, ny, acc)


def _label(*parts) -> str:
    return " ".join(f"{name}={list(value)}" if isinstance(value, tuple) else f"{name}={value}"
                    for name, value in zip(parts[::2], parts[1::2]))


def right_terms(s: StaircaseShape, degree: int) -> Iterator[Term]:
    """``key(hb(d))(x) * opposite_atom(d)(y)`` over admissible ``d``."""
    for d in admissible_compositions(s, degree):
        h = half_bubble_sort(d, s)
        poly = key_polynomial(h, s.height).tensor(opposite_atom(d, s.m))
        yield _label("d", d, "hb", h), poly


def _hb_groups(s: StaircaseShape, degree: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for d in admissible_compositions(s, degree):
        groups[half_bubble_sort(d, s)].append(d)
    return groups


def left_terms(s: StaircaseShape, degree: int) -> Iterator[Term]:
    """``key(hor(A))(x) * opposite_atom(d)(y)`` over DL arrays ``A`` and ``d`` with ``hb(d) = hor(A)``."""
    groups = _hb_groups(s, degree)
    for a in enumerate_dl(s, degree):
        kx = key_polynomial(a.hor, s.height)
        for d in groups.get(a.hor, ()):
            yield _label("A", a.hor, "d", d), kx.tensor(opposite_atom(d, s.m))


def alternating_terms(s: StaircaseShape, degree: int, orientation: str = DEFAULT_ORIENTATION) -> Iterator[Term]:
    """``mu(B, A) key(hor(A))(x) * opposite_key(vrt(B))(y)`` over ``B <= A`` in each ``DL(lam)``."""
    sc = staircase_corners(s)
    for lam in partitions_of(degree, max_parts=len(sc)):
        poset = DLPoset(s, lam, sc, orientation=orientation)
        for a in poset:
            kx = key_polynomial(a.hor, s.height)
            for b in poset.down_set(a):
                mu = poset.mobius(b, a)
                if mu:
                    poly = kx.tensor(opposite_key(b.vrt, s.m)).scale(mu)
                    yield _label("A", a.vrt, "B", b.vrt, "mu", mu), poly


def rhs_right(s: StaircaseShape, degree: int) -> BigradedPolynomial:
    return _sum_terms(right_terms(s, degree), s.height, s.m)


def rhs_left(s: StaircaseShape, degree: int) -> BigradedPolynomial:
    return _sum_terms(left_terms(s, degree), s.height, s.m)


def rhs_alternating(s: StaircaseShape, degree: int, orientation: str = DEFAULT_ORIENTATION) -> BigradedPolynomial:
    return _sum_terms(alternating_terms(s, degree, orientation), s.height, s.m)


_TERMS = {"right": right_terms, "left": left_terms, "alternating": alternating_terms}


@dataclass
class VdkChar:
    """The generalized van der Kallen character of one DL array, computed two ways."""
    array: ShapeArray
    atom_form: BigradedPolynomial
    mobius_form: BigradedPolynomial

    @property
    def match(self) -> bool:
        return self.atom_form == self.mobius_form


def vdk_char(a: ShapeArray, poset: DLPoset | None = None,
             orientation: str = DEFAULT_ORIENTATION) -> VdkChar:
    """Sum of opposite atoms over ``hb(d) = hor(a)`` versus Mobius inversion of opposite keys."""
    s = a.shape
    m = s.m
    atom = BigradedPolynomial(0, m)
    for d in compositions_of(a.degree, m):
        if is_admissible(d, s) and half_bubble_sort(d, s) == a.hor:
            atom = atom + opposite_atom(d, m)
    if poset is None:
        sc = staircase_corners(s)
        poset = DLPoset(s, sorted(a.values_on(sc.corners), reverse=True), sc, orientation)
    mob = BigradedPolynomial(0, m)
    for b in poset.down_set(a):
        mob = mob + opposite_key(b.vrt, m).scale(poset.mobius(b, a))
    return VdkChar(a, atom, mob)


def agl_shape(n: int, p: int, q: int) -> StaircaseShape:
    """Columns ``(n-p+1, n-p+2, ..., q)`` followed by ``n-q`` more columns of length ``q``."""
    _check_agl(n, p, q)
    return StaircaseShape(tuple(range(n - p + 1, q + 1)) + (q,) * (n - q))


def _check_agl(n: int, p: int, q: int) -> None:
    if not (n >= q >= p >= 1 and n - p + 1 <= q):
        raise ValueError(f"need n >= q >= p >= 1 and n - p + 1 <= q, got n={n} p={p} q={q}")


def agl_prime(d: Sequence[int], n: int, p: int, q: int) -> tuple[int, ...]:
    """The weight ``(0^(q-p), alpha_1, ..., alpha_p)`` of the AGL expansion.

    For ``i = p, ..., 1``: drop from ``d`` the rightmost occurrence of each
    ``alpha_j`` already chosen (``j > i``), then take ``alpha_i`` as the
    maximum of the last ``min(i, n - q + 1)`` remaining entries.
    """
    _check_agl(n, p, q)
    d = tuple(d)
    if len(d) != p:
        raise ValueError(f"d must have length p={p}")
    alpha = [0] * (p + 1)
    for i in range(p, 0, -1):
        remaining = list(d)
        for j in range(i + 1, p + 1):
            pos = len(remaining) - 1 - remaining[::-1].index(alpha[j])
            del remaining[pos]
        k = min(i, n - q + 1)
        alpha[i] = max(remaining[-k:])
    return (0,) * (q - p) + tuple(alpha[1:])


@dataclass
class DegreeStatus:
    degree: int
    exact: bool
    terms_checked: int
    monomial: dict | None = None
    lhs: int | None = None
    rhs: int | None = None
    contributing_terms: list[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    shape: list[int]
    identity: str
    degrees: list[int]
    statuses: list[DegreeStatus]
    wall_time: float | None
    orientation: str | None = None

    @property
    def ok(self) -> bool:
        return all(st.exact for st in self.statuses)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        data = dict(data)
        data.pop("ok", None)
        data["statuses"] = [DegreeStatus(**st) for st in data["statuses"]]
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        lines = [f"{self.identity} identity on shape {self.shape}"
                 + (f" (poset order: {self.orientation})" if self.orientation else "")]
        what = "entries <=" if self.identity == "agl" else "degree"
        for st in self.statuses:
            if st.exact:
                lines.append(f"  {what} {st.degree}: exact ({st.terms_checked} terms)")
            elif self.identity == "agl":
                lines.append(f"  {what} {st.degree}: MISMATCH {st.contributing_terms[0]}")
            else:
                lines.append(f"  {what} {st.degree}: MISMATCH at {st.monomial}: "
                             f"lhs={st.lhs} rhs={st.rhs}")
        if self.wall_time is not None:
            lines.append(f"  time {self.wall_time:.3f}s")
        return "\n".join(lines)


def _first_difference(lhs: BigradedPolynomial, rhs: BigradedPolynomial):
    diff = sorted(m for m in set(lhs.terms) | set(rhs.terms) if lhs[m] != rhs[m])
    return diff[0] if diff else None


def _compare(degree: int, lhs: BigradedPolynomial, terms: list[Term]) -> DegreeStatus:
    rhs = _sum_terms(terms, lhs.nx, lhs.ny)
    mono = _first_difference(lhs, rhs)
    if mono is None:
        return DegreeStatus(degree, True, len(terms))
    return DegreeStatus(
        degree, False, len(terms),
        monomial={"x": list(mono[:lhs.nx]), "y": list(mono[lhs.nx:])},
        lhs=lhs[mono], rhs=rhs[mono],
        contributing_terms=[label for label, poly in terms if poly[mono]],
    )


def verify(s: StaircaseShape, max_degree: int, which: str = "right",
           orientation: str = DEFAULT_ORIENTATION) -> VerificationReport:
    """Compare the product with the chosen expansion in every degree ``0..max_degree``."""
    if which not in _TERMS:
        raise ValueError(f"unknown identity {which!r}; choose from {IDENTITIES}")
    start = time.perf_counter()
    statuses = []
    for degree in range(max_degree + 1):
        lhs = lhs_degree(s, degree)
        if which == "alternating":
            terms = list(alternating_terms(s, degree, orientation))
        else:
            terms = list(_TERMS[which](s, degree))
        statuses.append(_compare(degree, lhs, terms))
    return VerificationReport(
        shape=list(s.columns), identity=which, degrees=list(range(max_degree + 1)),
        statuses=statuses, wall_time=time.perf_counter() - start,
        orientation=orientation if which == "alternating" else None,
    )


def verify_vdk(s: StaircaseShape, max_degree: int,
               orientation: str = DEFAULT_ORIENTATION) -> VerificationReport:
    """Atom form against Mobius form of the generalized van der Kallen character, every DL array."""
    start = time.perf_counter()
    sc = staircase_corners(s)
    statuses = []
    for degree in range(max_degree + 1):
        checked = 0
        status = DegreeStatus(degree, True, 0)
        for lam in partitions_of(degree, max_parts=len(sc)):
            poset = DLPoset(s, lam, sc, orientation)
            for a in poset:
                ch = vdk_char(a, poset)
                checked += 1
                if not ch.match and status.exact:
                    mono = _first_difference(ch.atom_form, ch.mobius_form)
                    status = DegreeStatus(degree, False, 0, monomial={"x": [], "y": list(mono)},
                                          lhs=ch.atom_form[mono], rhs=ch.mobius_form[mono],
                                          contributing_terms=[_label("A", a.vrt)])
        status.terms_checked = checked
        statuses.append(status)
    return VerificationReport(list(s.columns), "vdk-cross", list(range(max_degree + 1)),
                              statuses, time.perf_counter() - start, orientation)


def verify_agl(n: int, p: int, q: int, bound: int) -> VerificationReport:
    """``agl_prime == half_bubble_sort`` for every ``d`` with entries ``<= bound``."""
    start = time.perf_counter()
    s = agl_shape(n, p, q)
    status = DegreeStatus(bound, True, 0)
    for d in bounded_compositions(p, bound):
        status.terms_checked += 1
        a, h = agl_prime(d, n, p, q), half_bubble_sort(d, s)
        if a != h:
            status = DegreeStatus(bound, False, status.terms_checked,
                                  contributing_terms=[_label("d", d, "agl", a, "hb", h)])
            break
    return VerificationReport(list(s.columns), "agl", [bound], [status], time.perf_counter() - start)
