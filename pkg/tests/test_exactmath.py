from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from lensjones.exactmath import (
    GaussLaurent,
    even_continued_fraction,
    evaluate_continued_fraction,
    ext_gcd,
    floor_sum,
    rational_from_str,
    rational_to_str,
    regular_continued_fraction,
    solve_rep,
)

coeff = st.tuples(st.integers(-5, 5), st.integers(-5, 5))
polys = st.dictionaries(st.integers(-6, 6), coeff, max_size=5).map(GaussLaurent)


def coprime(lo=2, hi=300):
    return st.tuples(st.integers(lo, hi), st.integers(1, hi)).map(
        lambda t: (t[0], t[1] % t[0] or 1)).filter(lambda t: gcd(*t) == 1 and t[1] < t[0])


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GaussLaurent()


@given(polys, st.integers(-8, 8))
def test_shift_and_i_power(a, k):
    assert a.shift(k) == a * GaussLaurent.monomial(k)
    assert a.scale_by_i_power(k) == a * GaussLaurent({0: [(1, 0), (0, 1), (-1, 0), (0, -1)][k % 4]})
    assert a.scale_by_i_power(k).scale_by_i_power(-k) == a


@given(polys)
def test_json_round_trip(a):
    assert GaussLaurent.from_json(a.to_json()) == a


@given(polys)
def test_substitutions_are_involutions(a):
    assert a.substitute_q_inverse().substitute_q_inverse() == a
    assert a.substitute_neg_q().substitute_neg_q() == a


def test_i_q_power():
    assert GaussLaurent.i_q_power(2) == GaussLaurent({2: -1})
    assert GaussLaurent.i_q_power(-1) == GaussLaurent({-1: (0, -1)})
    assert GaussLaurent.i_q_power(3) ** -1 == GaussLaurent.i_q_power(-3)


def test_monomial_inverse_only():
    with pytest.raises(ValueError):
        GaussLaurent({0: 1, 1: 1}) ** -1


@given(st.fractions())
def test_rational_strings(x):
    assert rational_from_str(rational_to_str(x)) == x


def test_rational_zero_format():
    assert rational_to_str(Fraction(0)) == "0/1"


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ext_gcd(a, b):
    if a == 0 and b == 0:
        return
    g, x, y = ext_gcd(a, b)
    assert g == gcd(a, b) and a * x + b * y == g


@given(coprime())
def test_solve_rep(pq):
    p, q = pq
    r, s = solve_rep(p, q)
    assert p * s - q * r == 1
    assert 0 < s <= q and 0 < r < p


def test_solve_rep_examples():
    assert solve_rep(3, 1) == (2, 1)
    assert solve_rep(5, 2) == (2, 1)
    with pytest.raises(ValueError):
        solve_rep(4, 2)


@given(st.integers(0, 40), st.integers(1, 30), st.integers(-50, 50), st.integers(-50, 50))
def test_floor_sum_brute_force(n, m, a, b):
    assert floor_sum(n, m, a, b) == sum((a * i + b) // m for i in range(n))


@given(coprime(2, 500))
def test_regular_continued_fraction(pq):
    p, q = pq
    cf = regular_continued_fraction(p, q)
    assert len(cf) % 2 == 1 and all(c > 0 for c in cf)
    assert evaluate_continued_fraction(cf) == Fraction(p, q)


@given(coprime(2, 500))
def test_even_continued_fraction(pq):
    p, q = pq
    cf = even_continued_fraction(p, q)
    assert all(c % 2 == 0 and c != 0 for c in cf)
    val = evaluate_continued_fraction(cf)
    assert val.numerator == p or val.numerator == -p
    assert (val.denominator * (1 if val > 0 else -1) - q) % p == 0


def test_even_continued_fraction_examples():
    assert evaluate_continued_fraction(even_continued_fraction(3, 2)) == Fraction(3, 2)
    # p + q even: the opposite-parity representative is expanded
    assert evaluate_continued_fraction(even_continued_fraction(3, 1)) == Fraction(3, -2)
