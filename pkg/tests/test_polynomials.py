from itertools import product

import pytest
from hypothesis import given, strategies as st

from schubcrystal.key_tableaux import enumerate_sskt
from schubcrystal.permutations import all_permutations, inverse, longest, shift
from schubcrystal.polynomials import (
    SparsePolynomial as P, apply_operator_word, demazure_character,
    divided_difference, generating_polynomial, isobaric_divided_difference,
    schubert_bgg, schubert_via_rfc, schur_via_ssyt, stanley_polynomial,
)

KAPPA_0212 = {
    (2, 2, 1, 0): 1, (2, 2, 0, 1): 1, (2, 1, 2, 0): 1, (2, 1, 1, 1): 2,
    (2, 1, 0, 2): 1, (2, 0, 2, 1): 1, (2, 0, 1, 2): 1, (1, 2, 2, 0): 1,
    (1, 2, 1, 1): 2, (1, 2, 0, 2): 1, (1, 1, 2, 1): 1, (1, 1, 1, 2): 1,
    (0, 2, 2, 1): 1, (0, 2, 1, 2): 1,
}


def polys(nvars=3, max_exp=3):
    exps = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(lambda d: P(nvars, d))


def x(i, n=3):
    return P.variable(i, n)


def test_arithmetic_and_canonical_form():
    f = x(1) * x(1) * x(2) + 2 * x(1) * x(2) * x(3)
    assert str(f) == "x1^2*x2 + 2*x1*x2*x3"
    assert f - f == P.zero(3)
    assert len(f) == 2 and f.mass() == 3
    assert P.from_json(f.to_json()) == f
    assert str(P.zero(2)) == "0"


def test_mismatched_arity_is_an_error():
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)
    with pytest.raises(ValueError):
        P(2, {(1, 2, 3): 1})


def test_divided_difference_examples():
    assert divided_difference(1, x(1) * x(1)) == x(1) + x(2)
    assert divided_difference(1, x(3)) == P.zero(3)
    assert divided_difference(2, x(2)) == P.one(3)


@given(polys(), st.integers(1, 2))
def test_divided_difference_is_exact_division(f, i):
    # (x_i - x_{i+1}) * d_i f == f - s_i f
    assert (x(i) - x(i + 1)) * divided_difference(i, f) == f - f.swap(i)


@given(polys(), st.integers(1, 2))
def test_divided_difference_squares_to_zero(f, i):
    assert divided_difference(i, divided_difference(i, f)) == P.zero(3)


@given(polys(), st.integers(1, 2))
def test_isobaric_is_idempotent(f, i):
    once = isobaric_divided_difference(i, f)
    assert isobaric_divided_difference(i, once) == once


@given(polys())
def test_braid_relation(f):
    lhs = apply_operator_word((1, 2, 1), f)
    rhs = apply_operator_word((2, 1, 2), f)
    assert lhs == rhs


def test_non_reduced_operator_word_rejected():
    with pytest.raises(ValueError):
        apply_operator_word((1, 1), x(1))


def test_schubert_small_cases():
    assert schubert_bgg((1, 2, 3)) == P.one(3)
    assert schubert_bgg((2, 1, 3)) == x(1)
    assert schubert_bgg((1, 3, 2)) == x(1) + x(2)
    assert schubert_bgg((3, 2, 1)) == x(1) * x(1) * x(2)
    assert schubert_bgg(longest(4)) == P.monomial((3, 2, 1, 0))


def test_schubert_methods_agree_through_s5():
    for n in range(1, 6):
        for w in all_permutations(n):
            assert schubert_bgg(w) == schubert_via_rfc(w), w


def test_demazure_character_0212():
    kappa = demazure_character((0, 2, 1, 2))
    assert dict(kappa.terms()) == KAPPA_0212
    assert len(kappa) == 14


def test_demazure_character_of_partition_is_monomial():
    assert demazure_character((2, 1, 0)) == P.monomial((2, 1, 0))


def test_demazure_character_of_reversed_partition_is_schur():
    assert demazure_character((0, 1, 2)) == schur_via_ssyt((2, 1), 3)


def test_demazure_character_matches_key_tableaux():
    for length in range(1, 5):
        for a in product(range(4), repeat=length):
            gen = generating_polynomial((t.weight() for t in enumerate_sskt(a)), length)
            assert demazure_character(a) == gen, a


def test_schubert_of_143625_is_sum_of_two_keys():
    w = (1, 4, 3, 6, 2, 5)
    expected = demazure_character((0, 2, 1, 2, 0, 0)) + demazure_character((0, 3, 1, 1, 0, 0))
    assert schubert_bgg(w) == expected


def test_stanley_of_143625_is_sum_of_two_schurs():
    w = (1, 4, 3, 6, 2, 5)
    assert stanley_polynomial(w, 4) == schur_via_ssyt((2, 2, 1), 4) + schur_via_ssyt((3, 1, 1), 4)


def test_schur_is_symmetric():
    s = schur_via_ssyt((2, 1), 3)
    assert s == s.swap(1) == s.swap(2)
    assert s.mass() == 8


@pytest.mark.parametrize("text", ["132", "213", "231", "312", "321"])
def test_stable_limit(text):
    w = tuple(int(c) for c in text)
    for ell in range(1, 4):
        target = stanley_polynomial(w, ell)
        for m in range(ell - 1, ell + 3):
            assert schubert_bgg(shift(w, m)).restrict(ell) == target


def test_stable_limit_needs_enough_leading_fixed_points():
    # with only one fixed point in front, x3 is still missing
    w = (2, 1, 3)
    assert schubert_bgg(shift(w, 1)).restrict(3) != stanley_polynomial(w, 3)


def test_restrict_and_pad():
    f = x(1) + x(3)
    assert f.restrict(2) == P.variable(1, 2)
    assert f.restrict(2).pad(3) == x(1)
    assert x(1, 1).restrict(2) == P.variable(1, 2)


def test_stanley_of_inverse_transposes_shapes():
    w = inverse((1, 4, 3, 6, 2, 5))
    assert stanley_polynomial(w, 4) == schur_via_ssyt((3, 2), 4) + schur_via_ssyt((3, 1, 1), 4)
