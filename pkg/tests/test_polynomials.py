import itertools
import json

import pytest
from hypothesis import given, strategies as st

from staircase_cauchy.arrays import enumerate_dl
from staircase_cauchy.compositions import dominant_part, partitions_of
from staircase_cauchy.permutations import cherednik_le, longest_element, word_product
from staircase_cauchy.polynomials import (AlphabetMismatch, BigradedPolynomial, demazure_atom,
                                          demazure_pi, demazure_pibar, key_polynomial,
                                          opposite_atom, opposite_key, schur,
                                          semistandard_tableaux, x_var, y_var)
from staircase_cauchy.shapes import validate


def X(*exps, c=1):
    return BigradedPolynomial.monomial(exps, (), c)


def poly_strategy(n, max_degree=6, max_terms=5):
    mono = st.lists(st.integers(0, max_degree // n + 1), min_size=n, max_size=n)
    return st.lists(st.tuples(mono, st.integers(-3, 3)), max_size=max_terms).map(
        lambda items: BigradedPolynomial(n, 0, [(tuple(m), c) for m, c in items]))


# -- arithmetic ---------------------------------------------------------------------------------

def test_zero_coefficients_are_dropped():
    p = BigradedPolynomial(2, 0, {(1, 0): 1, (0, 1): 0})
    assert len(p) == 1
    assert not (p - p)
    assert (p - p).terms == {}


def test_bad_exponents():
    with pytest.raises(ValueError):
        BigradedPolynomial(2, 0, {(1,): 1})
    with pytest.raises(ValueError):
        BigradedPolynomial(1, 0, {(-1,): 1})


def test_basic_products():
    x1, x2 = x_var(1, 2), x_var(2, 2)
    assert x1 * (x1 + x2) == X(2, 0) + X(1, 1)
    p = x1 + x2 * 3
    assert BigradedPolynomial.constant(1, 2) * p == p
    assert 1 * p == p
    assert str(x1 * (x1 + x2)) == "x1^2 + x1*x2"


def test_alphabets_must_match():
    with pytest.raises(AlphabetMismatch):
        x_var(1, 2) + x_var(1, 3)
    assert x_var(1, 2) != x_var(1, 3)
    # an empty alphabet embeds into any other
    mixed = x_var(1, 2) * y_var(1, 3)
    assert mixed.nx == 2 and mixed.ny == 3
    assert mixed.coefficient((1, 0), (1, 0, 0)) == 1
    assert x_var(1, 2).tensor(y_var(2, 2)) == x_var(1, 2) * y_var(2, 2)
    with pytest.raises(AlphabetMismatch):
        y_var(1, 2).tensor(x_var(1, 2))


@given(poly_strategy(3), poly_strategy(3), poly_strategy(3))
def test_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q - q == p


def test_variable_permutations():
    p = X(2, 1, 0)
    assert p.swap(1) == X(1, 2, 0)
    assert p.reverse_variables() == X(0, 1, 2)
    assert p.permute_variables([2, 3, 1]) == X(0, 2, 1)
    with pytest.raises(ValueError):
        p.permute_variables([1, 1, 2])
    with pytest.raises(ValueError):
        p.swap(1, alphabet="z")


@given(poly_strategy(2), st.integers(0, 2))
def test_polynomial_json_round_trip(p, ny):
    q = p.tensor(BigradedPolynomial.constant(1, 0, ny)) if ny else p
    back = BigradedPolynomial.from_json(q.to_json(), q.nx, q.ny)
    assert back == q and (back.nx, back.ny) == (q.nx, q.ny)
    rows = json.loads(q.to_json())
    assert rows == sorted(rows, key=lambda r: (r["x"], r["y"]))


def test_tsv_output():
    p = x_var(1, 2).tensor(y_var(2, 2)) + x_var(2, 2).tensor(y_var(1, 2)).scale(3)
    assert p.to_tsv() == "0,1\t1,0\t3\n1,0\t0,1\t1"


# -- divided differences ------------------------------------------------------------------------

def test_pi_examples():
    assert demazure_pi(X(2, 0), 1) == X(2, 0) + X(1, 1) + X(0, 2)
    assert demazure_pi(X(1, 1), 1) == X(1, 1)
    assert demazure_pi(X(0, 1), 1) == BigradedPolynomial(2, 0)
    assert demazure_pi(X(0, 3), 1) == -(X(1, 2) + X(2, 1))
    with pytest.raises(IndexError):
        demazure_pi(X(1, 0), 2)
    with pytest.raises(IndexError):
        demazure_pi(X(1, 0), 0)


def test_pi_is_the_divided_difference():
    # (x1 - x2) * pi_1(f) == x1 f - x2 s_1(f)
    for a, b in itertools.product(range(5), repeat=2):
        f = X(a, b)
        x1, x2 = x_var(1, 2), x_var(2, 2)
        assert (x1 - x2) * demazure_pi(f, 1) == x1 * f - x2 * f.swap(1)


def test_pibar_examples():
    assert demazure_pibar(X(2, 0), 1) == X(1, 1) + X(0, 2)
    assert demazure_pibar(X(1, 1) + X(2, 0) + X(0, 2), 1) == BigradedPolynomial(2, 0)
    assert demazure_pibar(BigradedPolynomial.constant(1, 2), 1) == BigradedPolynomial(2, 0)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), poly_strategy(n), st.integers(1, n - 1))))
def test_pi_idempotent_and_pibar_squared(args):
    n, p, i = args
    once = demazure_pi(p, i)
    assert demazure_pi(once, i) == once
    bar = demazure_pibar(p, i)
    assert demazure_pibar(bar, i) == -bar


@given(st.integers(3, 4).flatmap(lambda n: st.tuples(st.just(n), poly_strategy(n), st.integers(1, n - 2))))
def test_braid_relations(args):
    n, p, i = args
    for op in (demazure_pi, demazure_pibar):
        lhs = op(op(op(p, i), i + 1), i)
        rhs = op(op(op(p, i + 1), i), i + 1)
        assert lhs == rhs


@given(poly_strategy(4))
def test_distant_operators_commute(p):
    assert demazure_pi(demazure_pi(p, 1), 3) == demazure_pi(demazure_pi(p, 3), 1)


def _apply_word(p, word, op=demazure_pi):
    for i in reversed(word):
        p = op(p, i)
    return p


@pytest.mark.parametrize("n, words", [
    (3, [(1, 2, 1), (2, 1, 2)]),
    (4, [(1, 2, 1, 3, 2, 1), (3, 2, 3, 1, 2, 3), (1, 2, 3, 1, 2, 1), (2, 1, 3, 2, 3, 1)]),
])
def test_longest_word_independence(n, words):
    for w in words:
        assert len(w) == n * (n - 1) // 2 and word_product(w, n) == longest_element(n)
    for lam in itertools.product(range(3), repeat=n):
        dom = X(*dominant_part(lam).padded(n))
        results = {_apply_word(dom, w) for w in words}
        assert len(results) == 1
        # the whole orbit is reached: the full symmetrization is the Schur polynomial
        assert results.pop() == schur(dominant_part(lam), n)


# -- keys, atoms and Schur polynomials ----------------------------------------------------------

@pytest.mark.parametrize("lam, expected", [
    ((2, 0), X(2, 0)),
    ((0, 2), X(2, 0) + X(1, 1) + X(0, 2)),
    ((0, 0), X(0, 0)),
    ((1, 0, 2), X(2, 1, 0) + X(2, 0, 1) + X(1, 2, 0) + X(1, 1, 1) + X(1, 0, 2)),
])
def test_key_examples(lam, expected):
    assert key_polynomial(lam, len(lam)) == expected


@pytest.mark.parametrize("lam, expected", [
    ((2, 0), X(2, 0)),
    ((0, 2), X(1, 1) + X(0, 2)),
    ((0, 0, 0), X(0, 0, 0)),
])
def test_atom_examples(lam, expected):
    assert demazure_atom(lam, len(lam)) == expected


def test_schur_examples():
    assert schur((1,), 2) == X(1, 0) + X(0, 1)
    assert schur((2, 1), 2) == X(2, 1) + X(1, 2)
    assert len(list(semistandard_tableaux((2, 1), 3))) == 8
    for n in range(1, 5):
        for d in range(4):
            assert schur((d,), n) == key_polynomial((0,) * (n - 1) + (d,), n)


def test_schur_counts_match_hook_content():
    # number of SSYT of shape (3,2) with entries <= 3 is 15
    assert sum(schur((3, 2), 3).terms.values()) == 15


@pytest.mark.parametrize("n", [1, 2, 3])
def test_atoms_sum_to_keys(n):
    for lam in itertools.product(range(4), repeat=n):
        orbit = set(itertools.permutations(lam))
        total = BigradedPolynomial(n, 0)
        for mu in orbit:
            if cherednik_le(mu, lam):
                total = total + demazure_atom(mu, n)
        assert total == key_polynomial(lam, n), lam


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_sum_of_atoms_is_schur(n):
    for lam in itertools.combinations_with_replacement(range(3, -1, -1), n):
        total = BigradedPolynomial(n, 0)
        for mu in set(itertools.permutations(lam)):
            total = total + demazure_atom(mu, n)
        assert total == schur(lam, n)


def test_antidominant_key_is_schur():
    for lam in partitions_of(5, max_parts=3):
        rev = tuple(reversed(lam.padded(3)))
        assert key_polynomial(rev, 3) == schur(lam, 3)


def test_y_alphabet():
    assert key_polynomial((0, 2), 2, alphabet="y") == BigradedPolynomial(0, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur((1,), 2, alphabet="y") == y_var(1, 2) + y_var(2, 2)


def test_opposite_key_examples():
    y = lambda *e: BigradedPolynomial.monomial((), e)
    assert opposite_key((2, 0), 2) == y(2, 0) + y(1, 1) + y(0, 2)
    assert opposite_key((0, 2), 2) == y(0, 2)
    assert opposite_key((0, 0), 2) == y(0, 0)
    assert opposite_atom((2, 0), 2) == y(2, 0) + y(1, 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_opposite_characters_contain_their_weight(m):
    for lam in itertools.product(range(3), repeat=m):
        assert opposite_key(lam, m).coefficient((), lam) == 1
        assert opposite_atom(lam, m).coefficient((), lam) == 1
        # every other monomial is strictly below lam in the dual Cherednik order
        for mono in opposite_key(lam, m).terms:
            assert cherednik_le(mono, lam, dual=True)


def test_parabolic_symmetry_on_the_intro_shape(intro_shape):
    # rows of equal length form blocks; each key of a horizontal weight is symmetric within
    # the row blocks, and each opposite key of a vertical weight within the column blocks
    s = intro_shape
    assert s.row_blocks() == [[1, 2], [3, 4], [5]]
    assert s.column_blocks() == [[1], [2, 3, 4], [5, 6]]
    for degree in range(4):
        for a in enumerate_dl(s, degree):
            kx = key_polynomial(a.hor, s.height)
            ky = opposite_key(a.vrt, s.m)
            for block in s.row_blocks():
                for i in block[:-1]:
                    assert kx.swap(i) == kx
            for block in s.column_blocks():
                for j in block[:-1]:
                    assert ky.swap(j, "y") == ky
