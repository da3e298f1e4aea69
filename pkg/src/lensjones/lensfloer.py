"""Correction terms of lens spaces.

Uses the recursion

    d(-L(p, q), i) = 1/4 - (2i + 1 - p - q)^2 / (4pq) - d(-L(q, r), j)

with ``r = p mod q``, ``j = i mod q`` and ``d(S^3) = 0``.  The values of
``L(p, q)`` itself are the negatives.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple

from .exactmath import rational_to_str

_cache: Dict[Tuple[int, int, int], Fraction] = {}
_lock = threading.Lock()


def _check(p: int, q: int) -> None:
    if p < 1 or gcd(p, q) != 1:
        raise ValueError(f"L({p}, {q}) needs p >= 1 and gcd(p, q) = 1")


def _d_minus(p: int, q: int, i: int) -> Fraction:
    """``d(-L(p, q), i)`` for ``0 <= q < p``, ``0 <= i < p``."""
    if p == 1:
        return Fraction(0)
    key = (p, q, i)
    val = _cache.get(key)
    if val is not None:
        return val
    n = 2 * i + 1 - p - q
    val = Fraction(p * q - n * n, 4 * p * q) - _d_minus(q, p % q, i % q)
    with _lock:
        _cache[key] = val
    return val


@lru_cache(maxsize=4096)
def _d_minus_list(p: int, q: int) -> Tuple[Fraction, ...]:
    if p == 1:
        return (Fraction(0),)
    child = _d_minus_list(q, p % q)
    four_pq = 4 * p * q
    return tuple(
        Fraction(p * q - (2 * i + 1 - p - q) ** 2, four_pq) - child[i % q] for i in range(p)
    )


def d_values(p: int, q: int) -> List[Fraction]:
    """``d(L(p, q), i)`` for ``i = 0, ..., p - 1``."""
    _check(p, q)
    if p == 1:
        return [Fraction(0)]
    if q < 0:
        return list(_d_minus_list(p, (-q) % p))
    return [-x for x in _d_minus_list(p, q % p)]


def recursion_depth(p: int, q: int) -> int:
    q %= p
    depth = 0
    while p > 1:
        p, q = q, p % q
        depth += 1
    return depth


def d_invariant(p: int, q: int, i: int, strict: bool = False) -> Fraction:
    """``d(L(p, q), i)``; ``q`` may be negative (``L(p, -q) = -L(p, q)``)."""
    _check(p, q)
    if strict and not 0 <= i < p:
        raise ValueError(f"index {i} out of range for L({p}, {q})")
    i %= p
    if p == 1:
        return Fraction(0)
    if q % p == 0:
        raise ValueError("q must be a unit mod p")
    if q < 0:
        # L(p, q) = -L(p, |q|): values change sign
        return _d_minus(p, (-q) % p, i)
    return -_d_minus(p, q % p, i)


def conjugate_index(p: int, q: int, i: int) -> int:
    """Index of the conjugate structure: ``i -> q - 1 - i (mod p)``."""
    return (q - 1 - i) % p


def spin_indices(p: int, q: int) -> List[int]:
    q %= p
    return [i for i in range(p) if conjugate_index(p, q, i) == i]


@dataclass(frozen=True)
class SpincRow:
    index: int
    d: Fraction
    spin: bool
    conjugate: int


@dataclass(frozen=True)
class SpincTable:
    p: int
    q: int
    rows: Tuple[SpincRow, ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "q": self.q,
            "rows": [
                {"i": r.index, "d": rational_to_str(r.d), "spin": r.spin, "conjugate": r.conjugate}
                for r in self.rows
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def spin_rows(self) -> List[SpincRow]:
        return [r for r in self.rows if r.spin]


def spinc_table(p: int, q: int) -> SpincTable:
    _check(p, q)
    if p == 1:
        return SpincTable(1, 0, (SpincRow(0, Fraction(0), True, 0),))
    spins = set(spin_indices(p, q))
    rows = tuple(
        SpincRow(i, d_invariant(p, q, i), i in spins, conjugate_index(p, q, i)) for i in range(p)
    )
    return SpincTable(p, q % p, rows)
