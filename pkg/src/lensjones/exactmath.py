"""Exact arithmetic: rationals, Gaussian-integer Laurent polynomials, continued fractions."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

Rational = Fraction

__all__ = [
    "Rational",
    "GaussLaurent",
    "ext_gcd",
    "solve_rep",
    "floor_sum",
    "even_continued_fraction",
    "evaluate_continued_fraction",
    "regular_continued_fraction",
    "rational_to_str",
    "rational_from_str",
]


def rational_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    num, _, den = s.strip().partition("/")
    return Fraction(int(num), int(den) if den else 1)


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) > 0``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def solve_rep(p: int, q: int) -> Tuple[int, int]:
    """Smallest positive ``(r, s)`` with ``p*s - q*r == 1``.

    Returned as ``(r, s)``.  For ``q == 1`` this is ``(p - 1, 1)``.
    """
    if p <= 0 or not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    # s = p^{-1} mod q, taken in 1..q
    s = pow(p, -1, q) if q > 1 else 1
    r = (p * s - 1) // q  # positive because p*s - 1 >= p - 1 >= q
    return r, s


def floor_sum(n: int, m: int, a: int, b: int) -> int:
    """``sum(floor((a*i + b) / m) for i in range(n))`` in ``O(log)`` steps."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    total = 0
    while n > 0:
        if a >= m or a < 0:
            total += (n * (n - 1) // 2) * (a // m)
            a %= m
        if b >= m or b < 0:
            total += n * (b // m)
            b %= m
        y_max = a * n + b
        if y_max < m:
            break
        n, b = y_max // m, y_max % m
        m, a = a, m
    return total


def evaluate_continued_fraction(entries: Iterable[int]) -> Fraction:
    """Value of ``c1 + 1/(c2 + 1/(... + 1/cm))``."""
    entries = list(entries)
    if not entries:
        raise ValueError("empty continued fraction")
    val = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        val = c + 1 / val
    return val


def regular_continued_fraction(p: int, q: int) -> List[int]:
    """Positive expansion of p/q (0 < q <= p) with an odd number of terms."""
    if not 0 < q <= p or gcd(p, q) != 1:
        raise ValueError(f"bad fraction {p}/{q}")
    out = []
    a, b = p, q
    while b:
        out.append(a // b)
        a, b = b, a % b
    if len(out) % 2 == 0:
        # [..., a_n] == [..., a_n - 1, 1]
        out[-1] -= 1
        out.append(1)
        if out[-2] == 0:
            raise AssertionError("unreachable for q < p")
    return out


def even_continued_fraction(p: int, q: int) -> List[int]:
    """All-even expansion ``[c1, ..., cm]`` of ``p/q'`` with ``q' = q (mod p)``.

    ``q'`` equals ``q`` whenever ``p + q`` is odd; otherwise the representative
    ``q - p`` (or ``q + p``) of opposite parity is expanded, since an even
    continued fraction only exists for fractions of mixed parity.
    """
    if p < 1 or gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    if not 0 < abs(q) < p and not (p == 1 or (p == 2 and abs(q) == 1)):
        raise ValueError(f"need 0 < |q| < p, got {p}/{q}")
    if (p + q) % 2 == 0:
        q = q - p if q > 0 else q + p
    out = []
    num, den = p, q
    while den:
        # nearest even integer to num/den, ties toward zero
        c = 2 * round(Fraction(num, 2 * den))
        if c == 0:
            c = 2 if num * den > 0 else -2
        out.append(c)
        num, den = den, num - c * den
    return out


def _cmul(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


_I_POWERS = [(1, 0), (0, 1), (-1, 0), (0, -1)]


class GaussLaurent:
    """Laurent polynomial in ``q`` with Gaussian-integer coefficients.

    Stored sparsely as ``{exponent: (re, im)}`` with zero terms dropped.
    Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: Dict[int, Tuple[int, int]] = {}
        for e, c in (terms or {}).items():
            if isinstance(c, tuple):
                re, im = int(c[0]), int(c[1])
            elif isinstance(c, complex):
                re, im = int(c.real), int(c.imag)
            else:
                re, im = int(c), 0
            if re or im:
                clean[int(e)] = (re, im)
        self._terms = clean

    @classmethod
    def monomial(cls, exponent: int, coeff: object = 1) -> "GaussLaurent":
        return cls({exponent: coeff})

    @classmethod
    def i_q_power(cls, k: int) -> "GaussLaurent":
        """``(i q)^k``."""
        return cls({k: _I_POWERS[k % 4]})

    @property
    def terms(self) -> Dict[int, Tuple[int, int]]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, Tuple[int, int]]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, e: int) -> Tuple[int, int]:
        return self._terms.get(e, (0, 0))

    def is_real(self) -> bool:
        return all(im == 0 for _, im in self._terms.values())

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    @staticmethod
    def _lift(other: object) -> "GaussLaurent":
        if isinstance(other, GaussLaurent):
            return other
        if isinstance(other, (int, complex, tuple)):
            return GaussLaurent({0: other})
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "GaussLaurent":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, (re, im) in other._terms.items():
            a, b = out.get(e, (0, 0))
            out[e] = (a + re, b + im)
        return GaussLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "GaussLaurent":
        return GaussLaurent({e: (-a, -b) for e, (a, b) in self._terms.items()})

    def __sub__(self, other: object) -> "GaussLaurent":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "GaussLaurent":
        return (-self) + other

    def __mul__(self, other: object) -> "GaussLaurent":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, Tuple[int, int]] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                re, im = _cmul(c1, c2)
                a, b = out.get(e1 + e2, (0, 0))
                out[e1 + e2] = (a + re, b + im)
        return GaussLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GaussLaurent":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in _I_POWERS:
                raise ValueError("coefficient is not a unit")
            inv = _I_POWERS[(-_I_POWERS.index(c)) % 4]
            return GaussLaurent({-e: inv}) ** (-n)
        out = GaussLaurent({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def shift(self, k: int) -> "GaussLaurent":
        """Multiply by ``q^k``."""
        return GaussLaurent({e + k: c for e, c in self._terms.items()})

    def scale_by_i_power(self, k: int) -> "GaussLaurent":
        """Multiply every coefficient by ``i^k``."""
        u = _I_POWERS[k % 4]
        return GaussLaurent({e: _cmul(c, u) for e, c in self._terms.items()})

    def substitute_q_inverse(self) -> "GaussLaurent":
        return GaussLaurent({-e: c for e, c in self._terms.items()})

    def substitute_neg_q(self) -> "GaussLaurent":
        return GaussLaurent(
            {e: (c if e % 2 == 0 else (-c[0], -c[1])) for e, c in self._terms.items()}
        )

    def evaluate(self, z: complex) -> complex:
        return sum(complex(*c) * z**e for e, c in self._terms.items())

    def to_json(self) -> List[List[int]]:
        return [[e, re, im] for e, (re, im) in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "GaussLaurent":
        return cls({e: (re, im) for e, re, im in data})

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, (re, im) in sorted(self._terms.items()):
            if im == 0:
                c = str(re)
            elif re == 0:
                c = f"{im}i"
            else:
                c = f"({re}{im:+d}i)"
            parts.append(c if e == 0 else f"{c}*q^{e}")
        return " + ".join(parts)
