from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from lensjones.exactmath import solve_rep
from lensjones.rho import (
    IntegralityViolation,
    I_invariant,
    I_table_json,
    I_values,
    MINUS,
    PLUS,
    RepIndex,
    character,
    conjugacy_classes,
    iota,
    n_of_i,
    primary_spin_index,
    rho,
    segment_gap,
    spinc_window,
    triangle_count,
    triangle_count_enumerate,
    window_partition,
)
from lensjones.lensfloer import conjugate_index, spin_indices
from lensjones.twobridge import TwoBridge, signature

pairs = st.tuples(st.integers(2, 120), st.integers(1, 119)).map(
    lambda t: (t[0], t[1] % t[0] or 1)).filter(lambda t: gcd(*t) == 1)


def test_examples():
    assert rho(3, 1, 0) == 0
    assert rho(3, 1, 1) == Fraction(-1, 3)
    r, s = solve_rep(5, 3)
    for n in (1, 2):
        assert rho(5, r, n) - rho(3, s, n) == Fraction(-2 * n * n, 15)


def test_triangle_example():
    t = triangle_count(1, Fraction(1, 3))
    assert t.area == Fraction(1, 6) and t.count == Fraction(1, 4)


@given(st.integers(-60, 60), st.fractions(min_value=-40, max_value=40, max_denominator=50))
def test_triangle_count_matches_enumeration(n, height):
    assert triangle_count(n, height) == triangle_count_enumerate(n, height)


@given(pairs, st.integers(-300, 300))
def test_rho_symmetries(pq, n):
    a, b = pq
    assert rho(a, b, n) == rho(a, b, -n)
    assert rho(a, b, n) == rho(a, b + 7 * a, n)
    assert rho(a, b, n) == rho(a, b, n + a)
    assert rho(a, -b, n) == -rho(a, b, n)
    assert rho(a, b, a) == 0


def test_rho_rejects_bad_input():
    with pytest.raises(ValueError):
        rho(4, 2, 1)


def test_spinc_window_examples():
    assert spinc_window(4, 1) == [2]
    assert spinc_window(5, 3) == [2, 3, 4, 5]


def test_n_of_i_examples():
    assert n_of_i(4, 1, 2) == 0
    assert n_of_i(5, 3, 2) == -3


@given(pairs)
def test_window_range(pq):
    p, q = pq
    win = spinc_window(p, q)
    ns = [n_of_i(p, q, i) for i in win]
    bound = q if p % 2 else q - 1
    assert all(abs(n) <= bound for n in ns)
    if p % 2 == 0:
        # reduction mod q is a bijection onto Z/q
        assert sorted(i % q for i in win) == list(range(q))


def test_iota_example():
    _, s = solve_rep(5, 3)
    assert iota(5, 3, 2) == RepIndex(3, s, 0)


@given(pairs)
def test_spin_goes_to_trivial_character(pq):
    p, q = pq
    for i in spin_indices(p, q):
        assert character(p, q, i).trivial
        assert character(p, q, i).rho() == 0
    for i in range(p):
        j = conjugate_index(p, q, i)
        assert (character(p, q, i).n + character(p, q, j).n) % p == 0


@given(pairs)
def test_I_integral_and_conjugation_invariant(pq):
    p, q = pq
    vals = I_values(p, q, PLUS)
    assert vals == [I_invariant(p, q, i) for i in range(p)]
    for i in range(p):
        assert vals[conjugate_index(p, q, i)] == vals[i]


def test_minus_sign_is_not_integral():
    with pytest.raises(IntegralityViolation):
        I_values(3, 1, MINUS)


def test_unknot_I():
    assert I_values(1, 0) == [0]


@given(pairs)
def test_spin_I_is_minus_two_sigma(pq):
    p, q = pq
    if p % 2 == 0:
        return
    assert I_invariant(p, q, primary_spin_index(p, q)) == -2 * signature(TwoBridge(p, q))


@given(pairs)
def test_segment_gap_bound(pq):
    p, q = pq
    if q == 1:
        return
    for n in range(1, q):
        assert segment_gap(p, q, n) == Fraction(n, p * q) <= Fraction(1, p)


@given(pairs)
def test_window_partition(pq):
    p, q = pq
    for end in ("low", "high"):
        part = window_partition(p, q, end)
        assert sorted(part.first + part.second) == list(range(p))
        assert len(part.shared) == (2 if p % 2 else 0)


@given(pairs)
def test_conjugacy_classes(pq):
    p, q = pq
    reps = conjugacy_classes(p, q)
    assert len(reps) == (p + len(spin_indices(p, q))) // 2


def test_I_table_json():
    import json

    data = json.loads(I_table_json(5, 3))
    assert [r["I"] for r in data["rows"]] == I_values(5, 3)
