"""Kauffman bracket of 4-plat diagrams.

The state sum is organised as a transfer over the four strand positions:
each partial state is a crossingless matching of the current positions, so
the sum over all ``2^c`` smoothings costs ``O(c)`` matrix steps.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterable, Sequence, Tuple

Poly = Dict[int, int]  # exponent of A -> coefficient

_TOP = (1, 0, 3, 2)


def _padd(acc: Poly, poly: Poly, shift: int = 0, scale: int = 1) -> None:
    for e, c in poly.items():
        acc[e + shift] = acc.get(e + shift, 0) + scale * c


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = defaultdict(int)
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] += c1 * c2
    return {e: c for e, c in out.items() if c}


_DELTA: Poly = {2: -1, -2: -1}


def _cup_cap(match: Tuple[int, ...], k: int) -> Tuple[Tuple[int, ...], bool]:
    m = list(match)
    if m[k] == k + 1:
        return match, True
    a, b = m[k], m[k + 1]
    m[a], m[b] = b, a
    m[k], m[k + 1] = k + 1, k
    return tuple(m), False


def _closing_loops(match: Tuple[int, ...], bottom: Tuple[int, ...]) -> int:
    seen = set()
    loops = 0
    for start in range(4):
        if start in seen:
            continue
        loops += 1
        x = start
        while x not in seen:
            seen.add(x)
            y = match[x]
            seen.add(y)
            x = bottom[y]
    return loops


def plat_bracket(word: Sequence[Tuple[int, int]], mirror: bool = False,
                 top: Tuple[int, ...] = _TOP, bottom: Tuple[int, ...] = _TOP) -> Poly:
    """Bracket ``<D>`` (normalised ``<O> = 1``) of a plat closure.

    A letter ``(k, eps)`` with ``eps > 0`` has its over strand running from
    the upper-left to the lower-right end; rotating that strand
    counter-clockwise sweeps the left and right regions, so its A-smoothing
    is the cup-cap.
    """
    states: Dict[Tuple[int, ...], Poly] = {top: {0: 1}}
    for k, eps in word:
        over_nw_se = (eps > 0) != mirror
        a_exp_cupcap = 1 if over_nw_se else -1
        nxt: Dict[Tuple[int, ...], Poly] = defaultdict(dict)
        for match, poly in states.items():
            _padd(nxt[match], poly, shift=-a_exp_cupcap)
            new, loop = _cup_cap(match, k)
            contrib = _pmul(poly, _DELTA) if loop else poly
            _padd(nxt[new], contrib, shift=a_exp_cupcap)
        states = {m: {e: c for e, c in p.items() if c} for m, p in nxt.items()}
    total: Poly = {}
    for match, poly in states.items():
        loops = _closing_loops(match, bottom)
        term = poly
        for _ in range(loops - 1):
            term = _pmul(term, _DELTA)
        _padd(total, term)
    return {e: c for e, c in total.items() if c}


def bracket_state_sum(word: Sequence[Tuple[int, int]], mirror: bool = False) -> Poly:
    """Naive ``2^c`` state enumeration; only for small diagrams (test oracle)."""
    from itertools import product

    total: Poly = {}
    for choice in product((0, 1), repeat=len(word)):
        match = _TOP
        aexp = 0
        loops_mid = 0
        for (k, eps), cupcap in zip(word, choice):
            over_nw_se = (eps > 0) != mirror
            if cupcap:
                match, loop = _cup_cap(match, k)
                loops_mid += loop
                aexp += 1 if over_nw_se else -1
            else:
                aexp += -1 if over_nw_se else 1
        loops = loops_mid + _closing_loops(match, _TOP)
        term: Poly = {aexp: 1}
        for _ in range(loops - 1):
            term = _pmul(term, _DELTA)
        _padd(total, term)
    return {e: c for e, c in total.items() if c}


def evaluate(poly: Poly, a: complex) -> complex:
    return sum(c * a**e for e, c in poly.items())


def iter_terms(poly: Poly) -> Iterable[Tuple[int, int]]:
    return sorted(poly.items())
