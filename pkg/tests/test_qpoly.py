from hypothesis import given, settings, strategies as st
import pytest

from chromaq.qpoly import (ONE, Q, ZERO, QPoly, is_log_concave, is_nonnegative, is_palindromic,
                           is_unimodal, q_binomial, q_binomial_pascal, q_factorial, q_int)
from conftest import P

polys = st.lists(st.integers(-20, 20), max_size=7).map(QPoly)


def test_trimming_and_zero():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P(0, 0) == ZERO
    assert ZERO.degree is None and ZERO.low_degree is None
    assert P(0, 0, 3).low_degree == 2


def test_q_integers():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(3) == P(1, 1, 1)


def test_q_factorials():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == P(1, 1)
    assert q_factorial(3) == P(1, 2, 2, 1)


def test_q_binomials():
    assert q_binomial(5, 0) == ONE
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert q_binomial(3, 1) == q_int(3)
    for n in range(9):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial_pascal(n, k)


def test_q_binomial_counts_inversions_of_subsets():
    from itertools import combinations
    n, k = 6, 3
    counts = [0] * 20
    for S in combinations(range(1, n + 1), k):
        counts[sum(1 for i in range(1, n + 1) for j in S if i not in S and i > j)] += 1
    assert q_binomial(n, k) == QPoly(counts)


def test_exact_division():
    assert (q_factorial(5) // q_factorial(3)) == q_int(4) * q_int(5)
    with pytest.raises(ArithmeticError):
        P(1, 0, 1).exact_div(P(1, 1))


def test_str_and_json():
    assert str(P(1, 2, 1)) == "1 + 2*q + q^2"
    assert str(ZERO) == "0"
    big = P(10**30, -3)
    assert QPoly.from_json(big.to_json()) == big


def test_shape_predicates():
    e5 = P(1, 3, 4, 4, 4, 3, 1)
    assert is_palindromic(e5, 6)
    assert is_palindromic(ONE, 0)
    assert not is_palindromic(P(1, 1), 0)
    assert is_palindromic(P(0, 1, 3, 4, 3, 1), 6)
    assert is_unimodal(P(1, 3, 1))
    assert not is_unimodal(P(2, 1, 3))
    assert is_unimodal(P(0, 1, 3, 4, 3, 1))
    assert is_log_concave(P(1, 2, 1))
    assert not is_log_concave(P(1, 1, 0, 1))
    assert is_log_concave(e5)
    assert is_nonnegative(e5) and not is_nonnegative(P(1, -1))
    for pred in (is_unimodal, is_log_concave, is_nonnegative):
        assert pred(ZERO)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO


@given(polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, x):
    b = a * a + Q
    assert b(x) == a(x) ** 2 + x


@given(polys, st.lists(st.integers(-5, 5), min_size=1, max_size=4).map(QPoly).filter(
    lambda d: d and abs(d.coeffs[-1]) == 1))
def test_division_round_trip(a, d):
    quo, rem = (a * d).divmod(d)
    assert quo == a and rem == ZERO


@settings(max_examples=200)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=8))
def test_positive_log_concave_is_unimodal(coeffs):
    # only without internal zeros: 1 + q^3 is log-concave by the inequalities alone
    p = QPoly(coeffs)
    if is_log_concave(p):
        assert is_unimodal(p)


def test_log_concave_with_internal_zero_need_not_be_unimodal():
    assert not is_log_concave(P(1, 1, 0, 1))
    p = P(1, 0, 0, 1)
    assert is_log_concave(p) and not is_unimodal(p)
