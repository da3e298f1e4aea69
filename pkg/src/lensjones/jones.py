"""Jones polynomial and Khovanov grading sets of 2-bridge links.

Two independent routes produce the grading multiset ``M(K)``:

* from the Jones polynomial (Kauffman bracket) plus signature and linking
  number, by peeling off the ``E(c)`` contributions and reading the ``K(d)``
  blocks off the quotient by ``q^-1 - q``;
* from the skein recursion ``K -> (K0, K1)`` at the top crossing, starting
  from ``M(unknot) = {0}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .bracket import plat_bracket
from .exactmath import GaussLaurent
from .twobridge import (
    O1,
    O2,
    TwoBridge,
    _THROUGH,
    canonical,
    components,
    diagram,
    linking_number,
    normalize,
    signature,
)


class DecompositionFailure(ValueError):
    """The polynomial is not of the thin ``E``/``K`` form for the given data."""


@dataclass(frozen=True)
class GradingSet:
    """Multiset ``M(K)`` with its distinguished elements ``c1`` (, ``c2``)."""

    elements: Tuple[int, ...]
    c: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))
        rest = Counter(self.elements)
        rest.subtract(self.c)
        if min(rest.values(), default=0) < 0:
            raise ValueError("c-elements must belong to the multiset")

    @property
    def d(self) -> Tuple[int, ...]:
        rest = Counter(self.elements)
        rest.subtract(self.c)
        return tuple(sorted(rest.elements()))

    def shifted(self, k: int) -> "GradingSet":
        return GradingSet(tuple(x + k for x in self.elements), tuple(x + k for x in self.c))

    def negated(self) -> "GradingSet":
        return GradingSet(tuple(-x for x in self.elements), tuple(-x for x in self.c))

    def counter(self) -> Counter:
        return Counter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------------
# route 1: Kauffman bracket
# ---------------------------------------------------------------------------


def _bracket_to_jones(br: Dict[int, int], writhe: int) -> GaussLaurent:
    # f = (-A^3)^-w <D>, then A^e -> (-q)^(-e/2)
    sign_w = 1 if writhe % 2 == 0 else -1
    out: Dict[int, int] = {}
    for e, c in br.items():
        e = e - 3 * writhe
        if e % 2:
            raise AssertionError("bracket exponents must be even after normalisation")
        k = -e // 2
        out[k] = out.get(k, 0) + sign_w * c * (1 if k % 2 == 0 else -1)
    return GaussLaurent(out)


def jones_bracket(K: TwoBridge, orientation: str = O1) -> GaussLaurent:
    """Reduced Jones polynomial, Khovanov normalisation (``J(unknot) = 1``).

    The right-handed trefoil gives ``q^2 + q^6 - q^8``.
    """
    if K.is_unknot:
        return GaussLaurent({0: 1})
    D = diagram(K, orientation)
    br = plat_bracket(D.word, not K.mirror)
    return _bracket_to_jones(br, D.writhe())


def determinant_from_jones(J: GaussLaurent) -> int:
    """``|J(q = i)|``, the link determinant."""
    total_re = total_im = 0
    powers = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    for e, (re, im) in J:
        ur, ui = powers[e % 4]
        total_re += re * ur - im * ui
        total_im += re * ui + im * ur
    sq = total_re * total_re + total_im * total_im
    r = int(round(sq ** 0.5))
    assert r * r == sq
    return r


def _c_elements(sigma: int, lk: Optional[int]) -> Tuple[int, ...]:
    if lk is None:
        return (-sigma,)
    return (-sigma, 4 * lk - sigma)


def grading_set_from_jones(J: GaussLaurent, sigma: int, lk: Optional[int] = None) -> GradingSet:
    """Recover ``M(K)`` from the Jones polynomial of a thin link.

    ``J = sum_o s_o q^c_o + (q^-1 - q) sum_d s_d q^d`` with
    ``s_o = (-1)^((c_o + sigma)/2)`` and ``s_d = (-1)^((d + sigma - 1)/2)``.
    """
    if not J.is_real():
        raise DecompositionFailure("Jones polynomial has imaginary coefficients")
    cs = _c_elements(sigma, lk)
    rest: Dict[int, int] = {e: re for e, (re, _) in J}
    for c in cs:
        if (c + sigma) % 2:
            raise DecompositionFailure(f"c-element {c} has the wrong parity")
        s = 1 if ((c + sigma) // 2) % 2 == 0 else -1
        rest[c] = rest.get(c, 0) - s
    rest = {e: v for e, v in rest.items() if v}
    # divide by (q^-1 - q) from the top degree down; a quotient term at d
    # produces degrees d - 1 and d + 1, so d can never drop below lowest + 1
    lowest = min(rest, default=0)
    quotient: Dict[int, int] = {}
    while rest:
        top = max(rest)
        d = top - 1
        if d < lowest + 1:
            raise DecompositionFailure("remainder is not divisible by q^-1 - q")
        coeff = -rest[top]
        quotient[d] = coeff
        for e, v in ((d - 1, coeff), (d + 1, -coeff)):
            nv = rest.get(e, 0) - v
            if nv:
                rest[e] = nv
            else:
                rest.pop(e, None)
    ds: List[int] = []
    for d, coeff in quotient.items():
        if (d + sigma - 1) % 2:
            raise DecompositionFailure(f"K-block grading {d} has the wrong parity")
        s = 1 if ((d + sigma - 1) // 2) % 2 == 0 else -1
        if coeff * s < 0:
            raise DecompositionFailure(f"K-block at {d} has the wrong sign")
        ds.extend([d] * abs(coeff))
    return GradingSet(tuple(cs) + tuple(ds), cs)


def grading_set_bracket(K: TwoBridge, orientation: str = O1) -> GradingSet:
    lk = linking_number(K, orientation) if components(K) == 2 else None
    return grading_set_from_jones(jones_bracket(K, orientation), signature(K, orientation), lk)


# ---------------------------------------------------------------------------
# route 2: skein recursion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkeinStep:
    """Children of a canonical diagram at its (positive) top crossing.

    ``K0`` is the oriented resolution, ``K1`` the other one.  ``e`` is
    ``n_-(K1) - n_-(K)`` on the resolved diagrams.  ``lk0`` is the linking
    number of ``K0`` with the orientation inherited from ``K`` (knots only).
    """

    K: TwoBridge
    K0: TwoBridge
    K1: TwoBridge
    e: int
    lk0: Optional[int] = None


def _arcs_at_top(D) -> Tuple[set, set]:
    """Split a knot traversal at crossing 0 into the two oriented-resolution arcs."""
    trav = D.traversal[0]
    visits = [idx for idx, (ci, _) in enumerate(trav) if ci == 0]
    assert len(visits) == 2
    a_idx = set(range(visits[0] + 1, visits[1]))
    arc_a = {trav[i] for i in a_idx}
    arc_b = {trav[i] for i in range(len(trav)) if i not in a_idx and i not in visits}
    return arc_a, arc_b


def skein_children(K: TwoBridge) -> SkeinStep:
    """Resolve the top crossing of the positive canonical diagram.

    The plat of ``p/q`` with ``q`` even (for knots) has a negative top
    crossing, so the positive form is its mirror ``-K(p, q)``.  Its children
    are the mirrors of ``K(q, -p)`` (oriented resolution) and ``K(p - q, q)``.
    Use :func:`positive_form` to obtain a valid input.
    """
    if K.is_unknot:
        raise ValueError("the unknot has no crossings to resolve")
    if not K.mirror or canonical(K) != K:
        raise ValueError(f"{K} is not in positive canonical form")
    D = diagram(K)
    if D.signs[0] != 1:
        raise AssertionError(f"top crossing of {K} is not positive")
    K0 = normalize(K.q, -K.p).mirrored()
    K1 = normalize(K.p - K.q, K.q).mirrored()
    n_minus_K = D.n_minus()
    if components(K) == 1:
        arc_a, arc_b = _arcs_at_top(D)
        ends_a = {ci for ci, _ in arc_a}
        ends_b = {ci for ci, _ in arc_b}
        lk_twice = 0
        n_minus_K1 = 0
        for ci in range(1, D.crossing_count):
            mixed = ci in ends_a and ci in ends_b
            s = D.signs[ci]
            if mixed:
                lk_twice += s
                s = -s
            n_minus_K1 += s < 0
        assert lk_twice % 2 == 0
        return SkeinStep(K, K0, K1, n_minus_K1 - n_minus_K, lk_twice // 2)
    # link: K1 reverses component 1, flipping every inter-component crossing
    n_minus_K1 = 0
    for ci in range(1, D.crossing_count):
        a, b = D.strand_component[ci]
        s = D.signs[ci] if a == b else -D.signs[ci]
        n_minus_K1 += s < 0
    return SkeinStep(K, K0, K1, n_minus_K1 - n_minus_K)


def reorient(M: GradingSet, lk: int) -> GradingSet:
    """``M`` of the link with one component reversed; ``lk`` is the old linking number."""
    c1, c2 = M.c
    shifted = M.shifted(-6 * lk)
    return GradingSet(shifted.elements, (c2 - 6 * lk, c1 - 6 * lk))


def _remove_one(items: List[int], x: int) -> None:
    items.remove(x)


@lru_cache(maxsize=None)
def _skein_canonical(p: int, q: int) -> GradingSet:
    K = TwoBridge(p, q, True)
    step = skein_children(K)
    M1 = grading_set_skein(step.K1)
    e = step.e
    if components(K) == 2:
        M0 = grading_set_skein(step.K0)
        elems = [x + 1 for x in M0.elements] + [x + 3 * e + 2 for x in M1.elements]
        return GradingSet(tuple(elems), (M0.c[0] + 1, M1.c[0] + 3 * e + 2))
    # knot: K0 is a link carrying the inherited orientation
    lk_ref = linking_number(step.K0, O1)
    M0 = grading_set_skein(step.K0, O1)
    if step.lk0 == lk_ref:
        pass
    elif step.lk0 == -lk_ref:
        M0 = reorient(M0, lk_ref)
    else:
        raise AssertionError(f"inherited linking number {step.lk0} vs {lk_ref}")
    c1_0, c2_0 = M0.c
    c1_1 = M1.c[0]
    if (c1_1 + 3 * e + 2) - (c2_0 + 1) != 2:
        raise AssertionError(f"skein bookkeeping identity fails at {K}")
    left = [x + 1 for x in M0.elements]
    _remove_one(left, c2_0 + 1)
    right = [x + 3 * e + 2 for x in M1.elements]
    _remove_one(right, c1_1 + 3 * e + 2)
    elems = left + right + [c2_0 + 2]
    return GradingSet(tuple(elems), (c1_0 + 1,))


def grading_set_skein(K: TwoBridge, orientation: str = O1) -> GradingSet:
    """``M(K)`` by the skein recursion, with ``M(unknot) = {0}``."""
    if K.is_unknot:
        return GradingSet((0,), (0,))
    if orientation == O2:
        base = grading_set_skein(K, O1)
        return reorient(base, linking_number(K, O1))
    C = canonical(K)
    M = _skein_canonical(C.p, C.q)
    return M if C.mirror else M.negated()


def positive_form(K: TwoBridge) -> TwoBridge:
    """The representative of ``K`` or of its mirror whose top crossing is positive."""
    C = canonical(K)
    return C if C.mirror else C.mirrored()


# ---------------------------------------------------------------------------
# the Jones-polynomial identity and its sign conventions
# ---------------------------------------------------------------------------

AS_BUILT, MIRRORED = "as-built", "mirrored"
SUM_ALL, SUM_NON_SPIN = "all", "non-spin"
LOW, HIGH = "low", "high"
LITERAL, CORRECTED = "literal", "corrected"
CONVENTION_VERSION = "1"


class CalibrationFailure(RuntimeError):
    """No convention in the search space satisfies the identity on the seed family."""

    def __init__(self, report: Dict[str, object]):
        super().__init__("no convention satisfies the identity on the seed family")
        self.report = report


class MismatchReport(AssertionError):
    def __init__(self, report: "SkeinProofReport"):
        super().__init__(f"grading multisets differ for {report.K}")
        self.report = report


@dataclass(frozen=True)
class ConventionRecord:
    """One point of the finite sign-convention space.

    ``chirality`` says whether ``K(p, q)`` is paired with ``L(p, q)``
    (``as-built``) or with ``L(p, -q)``.  ``identity`` names the form of the
    polynomial identity the record was calibrated against.
    """

    i_sign: str = "+"
    spinc_sum: str = SUM_NON_SPIN
    chirality: str = AS_BUILT
    odd_p_endpoint: str = LOW
    identity: str = CORRECTED
    version: str = CONVENTION_VERSION

    def to_json(self) -> Dict[str, str]:
        return {
            "i_sign": self.i_sign,
            "spinc_sum": self.spinc_sum,
            "chirality": self.chirality,
            "odd_p_endpoint": self.odd_p_endpoint,
            "identity": self.identity,
            "version": self.version,
        }

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "ConventionRecord":
        return cls(**data)

    def label(self) -> str:
        return (f"I=8d{self.i_sign}rho, sum={self.spinc_sum}, chirality={self.chirality}, "
                f"endpoint={self.odd_p_endpoint}")


def convention_space(identity: str = LITERAL) -> List[ConventionRecord]:
    return [
        ConventionRecord(sign, ssum, chir, end, identity)
        for sign in ("+", "-")
        for ssum in (SUM_ALL, SUM_NON_SPIN)
        for chir in (AS_BUILT, MIRRORED)
        for end in (LOW, HIGH)
    ]


def _frozen_path():
    from importlib import resources

    return resources.files("lensjones").joinpath("data/convention.json")


def frozen_convention() -> ConventionRecord:
    """The record shipped with the package (written by :func:`calibrate_conventions`)."""
    import json

    return ConventionRecord.from_json(json.loads(_frozen_path().read_text()))


def cover_parameter(K: TwoBridge, convention: ConventionRecord) -> int:
    """``q`` of the lens space paired with ``K`` (``0`` for the unknot)."""
    if K.is_unknot:
        return 0
    flip = K.mirror != (convention.chirality == MIRRORED)
    return (-K.q) % K.p if flip else K.q


def spinc_structures(K: TwoBridge, convention: ConventionRecord) -> Tuple[List[int], set]:
    """Class representatives of the paired lens space and the set of spin ones.

    The structures are collected from the two windows (the odd-``p`` endpoint
    rule decides which window keeps the shared class) and then reduced modulo
    conjugation.
    """
    from .lensfloer import conjugate_index, spin_indices
    from .rho import window_partition

    if K.is_unknot:
        return [0], {0}
    p, qe = K.p, cover_parameter(K, convention)
    part = window_partition(p, qe, convention.odd_p_endpoint)
    reps: List[int] = []
    seen = set()
    for i in sorted(part.first + part.second):
        if i not in seen:
            seen.update((i, conjugate_index(p, qe, i)))
            reps.append(i)
    return reps, set(spin_indices(p, qe))


def I_by_index(K: TwoBridge, convention: ConventionRecord) -> List[int]:
    from .rho import I_values

    if K.is_unknot:
        return [0]
    return I_values(K.p, cover_parameter(K, convention), convention.i_sign)


def _theorem_data(K: TwoBridge, orientation: str):
    sig = signature(K, orientation)
    sigs = [signature(K, o) for o in _orientations_from(K, orientation)]
    return sig, sigs


def _orientations_from(K: TwoBridge, orientation: str) -> List[str]:
    # the given orientation plays the role of o1
    if components(K) == 1:
        return [O1]
    return [orientation, O2 if orientation == O1 else O1]


_ONE_MINUS = GaussLaurent({-1: 1, 1: -1})  # q^-1 - q


def theorem_lhs(K: TwoBridge, orientation: str = O1) -> GaussLaurent:
    """``i^-sigma q^(3 sigma) J(K)``."""
    sig = signature(K, orientation)
    return jones_bracket(K, orientation).shift(3 * sig).scale_by_i_power(-sig)


def theorem_rhs(K: TwoBridge, convention: ConventionRecord, orientation: str = O1) -> GaussLaurent:
    """``sum_o (iq)^(2 sigma(K^o)) + (q^-1 - q) sum_s (iq)^I(s)``, literally."""
    _, sigs = _theorem_data(K, orientation)
    out = GaussLaurent()
    for s in sigs:
        out = out + GaussLaurent.i_q_power(2 * s)
    reps, spins = spinc_structures(K, convention)
    values = I_by_index(K, convention)
    second = GaussLaurent()
    for i in reps:
        if convention.spinc_sum == SUM_NON_SPIN and i in spins:
            continue
        second = second + GaussLaurent.i_q_power(values[i])
    return out + _ONE_MINUS * second


def corrected_lhs(K: TwoBridge, orientation: str = O1) -> GaussLaurent:
    """``(-1)^sigma q^(3 sigma) J(K)``."""
    sig = signature(K, orientation)
    return jones_bracket(K, orientation).shift(3 * sig).scale_by_i_power(-2 * sig)


def corrected_rhs(K: TwoBridge, convention: ConventionRecord, orientation: str = O1) -> GaussLaurent:
    """``sum_o (iq)^(2 sigma(K^o)) + (q^-1 - q) sum_s i^(-I-1) q^(-I)``.

    Same ingredients as :func:`theorem_rhs`; only the encoding of the second
    sum differs (conjugate exponent and a real sign ``i^(-I-1)``).
    """
    _, sigs = _theorem_data(K, orientation)
    out = GaussLaurent()
    for s in sigs:
        out = out + GaussLaurent.i_q_power(2 * s)
    reps, spins = spinc_structures(K, convention)
    values = I_by_index(K, convention)
    second = GaussLaurent()
    for i in reps:
        if convention.spinc_sum == SUM_NON_SPIN and i in spins:
            continue
        second = second + GaussLaurent.monomial(-values[i]).scale_by_i_power(-values[i] - 1)
    return out + _ONE_MINUS * second


def seed_family(pmax: int, pmin: int = 1):
    """Every oriented 2-bridge link with ``pmin <= p <= pmax``, both chiralities.

    Ordered by ``(p, q, mirror, orientation)``, so the first failure is the
    smallest one.
    """
    from math import gcd

    for p in range(max(pmin, 1), pmax + 1):
        if p == 1:
            yield TwoBridge(1, 0), O1
            continue
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for mirror in (False, True):
                K = TwoBridge(p, q, mirror)
                for o in (O1, O2) if p % 2 == 0 else (O1,):
                    yield K, o


def identity_holds(K: TwoBridge, convention: ConventionRecord, orientation: str = O1) -> bool:
    from .rho import IntegralityViolation

    try:
        if convention.identity == LITERAL:
            return theorem_lhs(K, orientation) == theorem_rhs(K, convention, orientation)
        return corrected_lhs(K, orientation) == corrected_rhs(K, convention, orientation)
    except IntegralityViolation:
        return False


@dataclass
class IdentityFailure:
    K: TwoBridge
    orientation: str
    lhs: Optional[GaussLaurent]
    rhs: Optional[GaussLaurent]
    reason: str = "polynomials differ"

    def to_json(self) -> Dict[str, object]:
        return {
            "p": self.K.p,
            "q": self.K.q,
            "mirror": self.K.mirror,
            "orientation": self.orientation,
            "reason": self.reason,
            "lhs": self.lhs.to_json() if self.lhs is not None else None,
            "rhs": self.rhs.to_json() if self.rhs is not None else None,
        }


def first_failure(convention: ConventionRecord, pmax: int, pmin: int = 1) -> Optional[IdentityFailure]:
    """Smallest ``(p, q, mirror, orientation)`` where the identity breaks, if any."""
    from .rho import IntegralityViolation

    for K, o in seed_family(pmax, pmin):
        if identity_holds(K, convention, o):
            continue
        lhs_f, rhs_f = ((theorem_lhs, theorem_rhs) if convention.identity == LITERAL
                        else (corrected_lhs, corrected_rhs))
        try:
            return IdentityFailure(K, o, lhs_f(K, o), rhs_f(K, convention, o))
        except IntegralityViolation as exc:
            return IdentityFailure(K, o, lhs_f(K, o), None, f"non-integral I: {exc}")
    return None


@dataclass
class CalibrationResult:
    """Outcome of the convention search.

    ``literal`` maps every convention to its smallest counterexample for the
    identity as stated (``None`` if it survived); ``corrected`` does the same
    for the corrected form and for the grading-multiset identity.  ``record``
    is the unique survivor, with inert axes set to their first value.
    """

    seed_pmax: int
    literal: List[Tuple[ConventionRecord, Optional[IdentityFailure]]]
    corrected: List[Tuple[ConventionRecord, Optional[IdentityFailure]]]
    record: Optional[ConventionRecord]
    inert_axes: List[str] = field(default_factory=list)

    def literal_survivors(self) -> List[ConventionRecord]:
        return [c for c, f in self.literal if f is None]

    def to_json(self) -> Dict[str, object]:
        def rows(entries):
            return [
                {"convention": c.to_json(), "holds": f is None,
                 "smallest_counterexample": f.to_json() if f else None}
                for c, f in entries
            ]

        return {
            "seed_pmax": self.seed_pmax,
            "literal_identity": rows(self.literal),
            "literal_survivors": len(self.literal_survivors()),
            "corrected_identity": rows(self.corrected),
            "frozen": self.record.to_json() if self.record else None,
            "inert_axes": self.inert_axes,
        }


def _skeinproof_failure(convention: ConventionRecord, pmax: int) -> Optional[IdentityFailure]:
    from .rho import IntegralityViolation

    for K, o in seed_family(pmax):
        try:
            rep = verify_skeinproof(K, convention, o)
        except IntegralityViolation as exc:
            return IdentityFailure(K, o, None, None, f"non-integral I: {exc}")
        if not rep.ok:
            return IdentityFailure(K, o, None, None, "grading multisets differ")
    return None


def calibrate_conventions(seed_pmax: int = 12, strict: bool = False) -> CalibrationResult:
    """Search the convention space on every 2-bridge link with ``p <= seed_pmax``.

    The identity as literally stated is tried first.  Since no convention
    survives it (see the report), the record is then fixed by the corrected
    identity together with the grading-multiset identity; axes on which
    every survivor agrees with its flipped twin are reported as inert.
    With ``strict`` a :class:`CalibrationFailure` carrying the full report is
    raised when the literal identity has no survivor.
    """
    literal = [(c, first_failure(c, seed_pmax)) for c in convention_space(LITERAL)]
    corrected = []
    for c in convention_space(CORRECTED):
        fail = first_failure(c, seed_pmax) or _skeinproof_failure(c, seed_pmax)
        corrected.append((c, fail))
    pool = [c for c, f in literal if f is None] or [c for c, f in corrected if f is None]
    inert: List[str] = []
    record = None
    if pool:
        axes = ("i_sign", "spinc_sum", "chirality", "odd_p_endpoint")
        for ax in axes:
            if len({getattr(c, ax) for c in pool}) > 1:
                inert.append(ax)
        record = pool[0]
    result = CalibrationResult(seed_pmax, literal, corrected, record, inert)
    if strict and not result.literal_survivors():
        raise CalibrationFailure(result.to_json())
    return result


@dataclass
class SkeinProofReport:
    K: TwoBridge
    orientation: str
    spin_side: Tuple[int, ...]
    skein_side: Tuple[int, ...]
    c_expected: Tuple[int, ...]
    c_from_spin: Tuple[int, ...]

    @property
    def multisets_equal(self) -> bool:
        return Counter(self.spin_side) == Counter(self.skein_side)

    @property
    def spin_matches_c(self) -> bool:
        return self.c_expected == self.c_from_spin

    @property
    def ok(self) -> bool:
        return self.multisets_equal and self.spin_matches_c

    def to_json(self) -> Dict[str, object]:
        return {
            "p": self.K.p, "q": self.K.q, "mirror": self.K.mirror,
            "orientation": self.orientation, "ok": self.ok,
            "spin_side": sorted(self.spin_side), "skein_side": sorted(self.skein_side),
            "c_expected": list(self.c_expected), "c_from_spin": list(self.c_from_spin),
        }


def spin_for_orientation(K: TwoBridge, convention: ConventionRecord, orientation: str = O1) -> List[int]:
    """Spin structures paired with ``(o1, o2)`` of the oriented link.

    The first is the structure with ``n(i) = 0``; reversing one component or
    reflecting the diagram exchanges the two.
    """
    from .rho import primary_spin_index

    if K.is_unknot:
        return [0]
    qe = cover_parameter(K, convention)
    first = primary_spin_index(K.p, qe)
    if components(K) == 1:
        return [first]
    _, spins = spinc_structures(K, convention)
    (other,) = spins - {first}
    swap = (orientation == O2) != (K.mirror != (convention.chirality == MIRRORED))
    return [other, first] if swap else [first, other]


def verify_skeinproof(K: TwoBridge, convention: Optional[ConventionRecord] = None,
                      orientation: str = O1, strict: bool = False) -> SkeinProofReport:
    """Compare ``{-I(s) - 3 sigma}`` over conjugacy classes with ``M(K)``."""
    convention = convention or frozen_convention()
    sig = signature(K, orientation)
    values = I_by_index(K, convention)
    reps, _ = spinc_structures(K, convention)
    spin_side = tuple(-values[i] - 3 * sig for i in reps)
    M = grading_set_skein(K, orientation)
    c_spin = tuple(-values[i] - 3 * sig for i in spin_for_orientation(K, convention, orientation))
    rep = SkeinProofReport(K, orientation, spin_side, M.elements, M.c, c_spin)
    if strict and not rep.ok:
        raise MismatchReport(rep)
    return rep
