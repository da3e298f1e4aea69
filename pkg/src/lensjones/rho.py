"""Rho invariants of lens-space characters by lattice counting.

``rho(a, b, n) = 4 (area - int)`` of the triangle with vertices ``(0, 0)``,
``(n, 0)`` and ``(n, n b / a)``.  ``int`` counts lattice points with weight 1
inside, 1/2 on an edge and 1/4 at a vertex; the origin is left out.

The invariant only depends on ``b mod a`` and on ``n mod a``.  Combined with
the correction terms of :mod:`lensjones.lensfloer` it gives the integer

    I(i) = 8 d(L(p, q), i) + rho(p, r, n(i)),     n(i) = 2i + 1 - p - q,

where ``ps - qr = 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Dict, List, Optional, Set, Tuple

from .exactmath import floor_sum, rational_to_str, solve_rep
from .lensfloer import conjugate_index, d_invariant, d_values, spin_indices

PLUS, MINUS = "+", "-"


class IntegralityViolation(ArithmeticError):
    """``8d +/- rho`` came out non-integral: the sign convention is wrong."""


@dataclass(frozen=True)
class TriangleCount:
    area: Fraction
    count: Fraction


def _normalise_triangle(n: int, height: Fraction) -> Tuple[int, Fraction]:
    # point reflection for n < 0, then reflection in the x-axis
    if n < 0:
        n, height = -n, -height
    return n, abs(height)


def triangle_count_enumerate(n: int, height) -> TriangleCount:
    """Column-by-column enumeration with exact comparisons (reference version)."""
    n, height = _normalise_triangle(n, Fraction(height))
    if n == 0 or height == 0:
        return TriangleCount(Fraction(0), Fraction(0))
    slope = height / n
    count = Fraction(0)
    for x in range(1, n + 1):
        top = slope * x
        for y in range(0, floor(top) + 1):
            edges = (y == 0) + (y == top) + (x == n)
            count += (Fraction(1), Fraction(1, 2), Fraction(1, 4))[min(edges, 2)]
    return TriangleCount(n * height / 2, count)


def _quarter_count(n: int, num: int, den: int) -> int:
    """Four times the weighted count for ``n > 0`` and slope ``num/den > 0`` (lowest terms)."""
    # columns 0 < x < n: bottom point 1/2, floor(num x / den) points above it, the
    # top one only 1/2 when it is a lattice point (x divisible by den)
    inner = floor_sum(n, den, num, 0)
    on_hyp = (n - 1) // den
    quarters = 2 * (n - 1) + 4 * inner - 2 * on_hyp
    # last column x = n: bottom corner 1/4, edge points 1/2, top corner 1/4
    top, rem = divmod(num * n, den)
    if rem == 0:
        quarters += 1 + 2 * (top - 1) + 1
    else:
        quarters += 1 + 2 * top
    return quarters


def triangle_count(n: int, height) -> TriangleCount:
    """Area and weighted lattice count of the triangle (0,0), (n,0), (n, height).

    Sums whole columns with a floor sum, so the cost is logarithmic in ``n``.
    Negative ``n`` is the point-reflected triangle; both numbers are unchanged.
    """
    n, height = _normalise_triangle(n, Fraction(height))
    if n == 0 or height == 0:
        return TriangleCount(Fraction(0), Fraction(0))
    slope = height / n
    quarters = _quarter_count(n, slope.numerator, slope.denominator)
    return TriangleCount(n * height / 2, Fraction(quarters, 4))


def rho(a: int, b: int, n: int) -> Fraction:
    """``rho(a, b, n)`` for the character ``n`` of ``L(a, b)``.

    ``b`` is read modulo ``a`` (so ``rho(a, -b, n) = -rho(a, b, n)``).
    """
    if a < 1 or gcd(a, b) != 1:
        raise ValueError(f"rho({a}, {b}, n) needs a >= 1 and gcd(a, b) = 1")
    b %= a
    n = abs(n)
    if n == 0 or b == 0:
        return Fraction(0)
    # 4 * area = 2 n^2 b / a; slope b/a is already in lowest terms
    return Fraction(2 * n * n * b - a * _quarter_count(n, b, a), a)


def spinc_window(p: int, q: int) -> List[int]:
    """Integers in ``[(p - 1)/2, (p - 1 + 2q)/2]``."""
    lo = p // 2  # ceil((p - 1) / 2)
    hi = (p - 1 + 2 * q) // 2
    return list(range(lo, hi + 1))


def n_of_i(p: int, q: int, i: int) -> int:
    return 2 * i + 1 - p - q


@dataclass(frozen=True)
class RepIndex:
    """Character ``n`` of ``H_1(L(a, b)) = Z/a``, stored with ``0 <= n < a``."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", self.n % self.a)

    def rho(self) -> Fraction:
        return rho(self.a, self.b, self.n)

    @property
    def trivial(self) -> bool:
        return self.n == 0


def iota(p: int, q: int, i: int) -> RepIndex:
    """Window map: ``i`` in the window of ``(p, q)`` to a character of ``L(q, s)``."""
    if q < 1 or q >= p or gcd(p, q) != 1:
        raise ValueError(f"need 0 < q < p coprime, got ({p}, {q})")
    _, s = solve_rep(p, q)
    return RepIndex(q, s, n_of_i(p, q, i))


def character(p: int, q: int, i: int) -> RepIndex:
    """Character of ``L(p, r)`` attached to the structure ``i`` of ``L(p, q)``.

    ``n(i) mod p``; the spin structures go to the trivial character and
    conjugate structures to opposite characters.
    """
    if p == 1:
        return RepIndex(1, 0, 0)
    q %= p
    r, _ = solve_rep(p, q)
    return RepIndex(p, r, n_of_i(p, q, i))


def _combine(p: int, q: int, i: int, d: Fraction, rh: Fraction, sign: str) -> int:
    val = 8 * d + rh if sign == PLUS else 8 * d - rh
    if val.denominator != 1:
        raise IntegralityViolation(
            f"I = {val} is not an integer for L({p}, {q}), i = {i}, sign {sign}")
    return val.numerator


def I_invariant(p: int, q: int, i: int, sign: str = PLUS) -> int:
    """``8 d(L(p, q), i) +/- rho`` of the attached character; must be an integer."""
    if sign not in (PLUS, MINUS):
        raise ValueError("sign must be '+' or '-'")
    if p == 1:
        return 0
    return _combine(p, q, i, d_invariant(p, q, i), character(p, q, i).rho(), sign)


def I_values(p: int, q: int, sign: str = PLUS) -> List[int]:
    """``I`` for every index of ``L(p, q)`` at once."""
    if sign not in (PLUS, MINUS):
        raise ValueError("sign must be '+' or '-'")
    if p == 1:
        return [0]
    q %= p
    r, _ = solve_rep(p, q)
    ds = d_values(p, q)
    return [_combine(p, q, i, ds[i], rho(p, r, n_of_i(p, q, i) % p), sign) for i in range(p)]


def conjugacy_classes(p: int, q: int) -> List[int]:
    """One representative index (the smallest) per conjugacy class."""
    if p == 1:
        return [0]
    seen: Set[int] = set()
    reps = []
    for i in range(p):
        if i not in seen:
            j = conjugate_index(p, q, i)
            seen.update((i, j))
            reps.append(i)
    return reps


def primary_spin_index(p: int, q: int) -> int:
    """The spin structure with ``n(i) = 0``, i.e. ``i = (p + q - 1)/2``.

    For links this is the one induced from the spin structure of the
    3-sphere; for knots it is the only spin structure.  ``q`` is taken in
    ``(0, p)`` with ``p + q`` odd, replacing ``q`` by ``q + p`` if needed.
    """
    if p == 1:
        return 0
    q %= p
    if (p + q) % 2 == 0:
        q += p
    i = (p + q - 1) // 2 % p
    assert i in spin_indices(p, q % p)
    return i


@dataclass(frozen=True)
class IRow:
    index: int
    d: Fraction
    n: int
    rho: Fraction
    value: int
    spin: bool


def I_table(p: int, q: int, sign: str = PLUS) -> List[IRow]:
    if p == 1:
        return [IRow(0, Fraction(0), 0, Fraction(0), 0, True)]
    spins = set(spin_indices(p, q))
    rows = []
    for i in range(p):
        ch = character(p, q, i)
        rows.append(IRow(i, d_invariant(p, q, i), n_of_i(p, q % p, i), ch.rho(),
                         I_invariant(p, q, i, sign), i in spins))
    return rows


def I_table_json(p: int, q: int, sign: str = PLUS) -> str:
    rows = [
        {"i": r.index, "d": rational_to_str(r.d), "n": r.n, "rho": rational_to_str(r.rho),
         "I": r.value, "spin": r.spin}
        for r in I_table(p, q, sign)
    ]
    return json.dumps({"p": p, "q": q % p if p > 1 else 0, "sign": sign, "rows": rows})


def segment_gap(p: int, q: int, n: int) -> Fraction:
    """Vertical distance at ``x = n`` between the lines of slope ``r/p`` and ``s/q``."""
    r, s = solve_rep(p, q)
    return abs(Fraction(n * r, p) - Fraction(n * s, q))


@dataclass(frozen=True)
class WindowPartition:
    """The structures of ``L(p, q)`` reached from the two windows.

    ``first`` comes from the window of ``(p, q)`` reduced mod ``p``;
    ``second`` from the window of ``(p, p - q)``, transported back by the
    orientation-reversing identification ``j -> j + q``.  ``shared`` is their
    overlap, which is the conjugate pair of window endpoints when ``p`` is odd
    and empty when ``p`` is even.
    """

    first: Tuple[int, ...]
    second: Tuple[int, ...]
    shared: Tuple[int, ...]


def window_partition(p: int, q: int, endpoint: str = "low") -> WindowPartition:
    """Split ``Z/p`` between the two windows; asserts cover and disjointness.

    For odd ``p`` each window has one extra integer; ``endpoint`` picks which
    end of the first window keeps the shared class (``low`` or ``high``).
    """
    if endpoint not in ("low", "high"):
        raise ValueError("endpoint must be 'low' or 'high'")
    q %= p
    if not 0 < q < p:
        raise ValueError("need 0 < q < p")
    win1 = spinc_window(p, q)
    win2 = spinc_window(p, p - q)
    first_all = [i % p for i in win1]
    second_all = [(j + q) % p for j in win2]
    shared = sorted(set(first_all) & set(second_all))
    if p % 2 == 0:
        if shared:
            raise AssertionError(f"windows overlap for ({p}, {q}): {shared}")
        first, second = first_all, second_all
    else:
        lo, hi = win1[0] % p, win1[-1] % p
        if sorted(shared) != sorted({lo, hi}) or conjugate_index(p, q, lo) != hi:
            raise AssertionError(f"unexpected overlap {shared} for ({p}, {q})")
        keep = lo if endpoint == "low" else hi
        drop = hi if keep == lo else lo
        first = [i for i in first_all if i != drop]
        second = [i for i in second_all if i != keep]
    if sorted(first + second) != list(range(p)):
        raise AssertionError(f"windows do not partition Z/{p} for q = {q}")
    return WindowPartition(tuple(first), tuple(second), tuple(shared))
