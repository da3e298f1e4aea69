"""2-bridge links K(p, q) and their 4-plat diagrams.

A :class:`TwoBridge` is the canonical 4-plat of ``p/q`` (possibly mirrored).
The plat is the closure of the 4-braid ``s2^a1 s1^-a2 s2^a3 ...`` where
``[a1, ..., an]`` is the regular continued fraction of ``p/q`` with ``n`` odd,
capped by arcs joining positions (0, 1) and (2, 3) at both ends.  That
diagram is reduced and alternating with ``a1 + ... + an`` crossings.

Orientation: for a link the reference orientation ``o1`` is the one whose
top crossing has anti-parallel strands (its oriented resolution is the
cup-cap one).  For a knot the canonical representative has ``q`` even, which
forces the same property.  With the braid conventions below the top crossing
of every canonical diagram is then positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .exactmath import even_continued_fraction, regular_continued_fraction

O1, O2 = "o1", "o2"


@dataclass(frozen=True)
class TwoBridge:
    """The 2-bridge link K(p, q) with ``0 < q < p`` (or the unknot ``(1, 0)``).

    ``mirror`` records a reflection taken during normalization.
    """

    p: int
    q: int
    mirror: bool = False

    def __post_init__(self):
        if self.p < 1 or gcd(self.p, self.q) != 1:
            raise ValueError(f"invalid 2-bridge parameters ({self.p}, {self.q})")
        if self.p == 1:
            if self.q != 0:
                raise ValueError("unknot must be stored as (1, 0)")
        elif not 0 < self.q < self.p:
            raise ValueError("use normalize() for q outside (0, p)")

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    def mirrored(self) -> "TwoBridge":
        return TwoBridge(self.p, self.q, not self.mirror)

    def __str__(self) -> str:
        s = f"K({self.p},{self.q})"
        return f"-{s}" if self.mirror else s


def normalize(p: int, q: int) -> TwoBridge:
    """Normal form of K(p, q) with ``0 < q' < p``.

    ``K(p, q) = K(p, q mod p)``; a negative ``q`` denotes the mirror image,
    so ``K(p, -q)`` becomes the mirror of ``K(p, q mod p)`` and the flag is set.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    if p == 1:
        return TwoBridge(1, 0)
    if q < 0:
        return TwoBridge(p, (-q) % p, True)
    return TwoBridge(p, q % p)


def components(K: TwoBridge) -> int:
    return 2 if K.p % 2 == 0 else 1


def determinant(K: TwoBridge) -> int:
    return K.p


def canonical(K: TwoBridge) -> TwoBridge:
    """Same link, with ``q`` even when ``p`` is odd (needed by the skein rule).

    Uses ``K(p, q) = K(p, q^-1)`` and ``K(p, q) = -K(p, p - q)``.
    """
    if K.p % 2 == 0 or K.q % 2 == 0 or K.p == 1:
        return K
    qi = pow(K.q, -1, K.p)
    if qi % 2 == 0:
        return TwoBridge(K.p, qi, K.mirror)
    return TwoBridge(K.p, K.p - K.q, not K.mirror)


def orientation_classes(K: TwoBridge) -> List[str]:
    return [O1, O2] if components(K) == 2 else [O1]


# ---------------------------------------------------------------------------
# 4-plat diagrams
# ---------------------------------------------------------------------------


def plat_word(p: int, q: int) -> List[Tuple[int, int]]:
    """Braid word ``[(k, eps), ...]`` for K(p, q); ``k`` is the left position."""
    if p == 1:
        return []
    word = []
    for idx, a in enumerate(regular_continued_fraction(p, q)):
        k, eps = (1, 1) if idx % 2 == 0 else (0, -1)
        word.extend([(k, eps)] * a)
    return word


@dataclass
class PlanarDiagram:
    """Oriented 4-plat diagram.

    ``word`` lists the braid letters; crossing ``i`` joins row ``i`` to row
    ``i + 1``.  ``pd`` holds PD 4-tuples (incoming under edge first, then
    counter-clockwise) and ``signs`` the crossing signs.  ``component`` maps
    each crossing strand to a link component.
    """

    word: List[Tuple[int, int]]
    pd: List[Tuple[int, int, int, int]]
    signs: List[int]
    num_components: int
    strand_component: List[Tuple[int, int]]  # (over component, under component)
    over_dirs: List[Tuple[int, int]] = field(repr=False, default_factory=list)
    under_dirs: List[Tuple[int, int]] = field(repr=False, default_factory=list)
    # crossing ends visited along each component, in traversal order
    traversal: List[List[Tuple[int, str]]] = field(repr=False, default_factory=list)

    @property
    def crossing_count(self) -> int:
        return len(self.word)

    def writhe(self) -> int:
        return sum(self.signs)

    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def to_json(self) -> Dict[str, object]:
        return {
            "components": self.num_components,
            "crossings": [
                {"pd": list(x), "sign": s} for x, s in zip(self.pd, self.signs)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


class _UF:
    def __init__(self):
        self.parent: Dict[object, object] = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


# crossing ends: NW=(row i, pos k), NE=(i, k+1), SW=(i+1, k), SE=(i+1, k+1)
_THROUGH = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
_DIR = {"NW": (1, -1), "SE": (-1, 1), "NE": (-1, -1), "SW": (1, 1)}  # entering here
_CCW = ["NE", "NW", "SW", "SE"]


def _end_segment(i: int, k: int, end: str) -> Tuple[int, int]:
    return {
        "NW": (i, k),
        "NE": (i, k + 1),
        "SW": (i + 1, k),
        "SE": (i + 1, k + 1),
    }[end]


def build_diagram(word: Sequence[Tuple[int, int]], flip_component: Optional[int] = None,
                  mirror: bool = False) -> PlanarDiagram:
    """Oriented diagram of the plat closure of ``word``.

    Component 0 starts at the top-left segment heading down; a second
    component starts at its first crossing end in word order, oriented so the
    top crossing is anti-parallel.  ``flip_component`` reverses one component.
    ``mirror`` swaps every over/under.
    """
    c = len(word)
    uf = _UF()
    for i, (k, _) in enumerate(word):
        for pos in range(4):
            if pos not in (k, k + 1):
                uf.union((i, pos), (i + 1, pos))
    uf.union((0, 0), (0, 1))
    uf.union((0, 2), (0, 3))
    uf.union((c, 0), (c, 1))
    uf.union((c, 2), (c, 3))

    ends_of_edge: Dict[object, List[Tuple[int, str]]] = {}
    for i, (k, _) in enumerate(word):
        for end in _CCW:
            ends_of_edge.setdefault(uf.find(_end_segment(i, k, end)), []).append((i, end))
    for ends in ends_of_edge.values():
        assert len(ends) == 2, ends

    def other_end(edge_key, here):
        a, b = ends_of_edge[edge_key]
        if a == here:
            return b
        if b == here:
            return a
        raise AssertionError("end not on edge")

    def walk(i: int, entry: str) -> List[Tuple[int, str]]:
        """Sequence of (crossing, entry end) until returning to the start."""
        seq = []
        cur = (i, entry)
        while True:
            seq.append(cur)
            ci, e = cur
            out = _THROUGH[e]
            key = uf.find(_end_segment(ci, word[ci][0], out))
            nxt = other_end(key, (ci, out))
            if nxt == (i, entry):
                break
            cur = nxt
            if len(seq) > 4 * c + 4:
                raise AssertionError("walk did not close")
        return seq

    if c == 0:
        return PlanarDiagram([], [], [], 2, [], traversal=[[], []])

    traversals: List[List[Tuple[int, str]]] = []
    visited = set()
    # Component 0 enters the first crossing from the top.
    k0 = word[0][0]
    first = walk(0, "NW")
    traversals.append(first)
    for ci, e in first:
        visited.add((ci, e))
        visited.add((ci, _THROUGH[e]))
    if len(visited) < 4 * c:
        # second component passes through the top crossing via NE/SW
        second = walk(0, "NE")
        if (0, "NE") in visited or (0, "SW") in visited:
            second = None
            for i in range(c):
                for e in _CCW:
                    if (i, e) not in visited:
                        second = walk(i, e)
                        break
                if second:
                    break
        else:
            # anti-parallel at the top: component 0 goes down, so this one goes up
            second = walk(0, "SW")
        traversals.append(second)
        for ci, e in second:
            visited.add((ci, e))
            visited.add((ci, _THROUGH[e]))
    assert len(visited) == 4 * c
    if flip_component is not None:
        comp = traversals[flip_component]
        traversals[flip_component] = [
            (ci, _THROUGH[e]) for ci, e in reversed(comp)
        ]

    # Entry end of each strand at each crossing, and component id
    entries: Dict[int, List[Tuple[str, int]]] = {i: [] for i in range(c)}
    for comp_id, comp in enumerate(traversals):
        for ci, e in comp:
            entries[ci].append((e, comp_id))

    # Edge labels along traversal: the edge leaving the n-th visited crossing
    label_of_end: Dict[Tuple[int, str], int] = {}
    label = 0
    for comp in traversals:
        start = label + 1
        n = len(comp)
        for idx, (ci, e) in enumerate(comp):
            lab_in = start + (idx - 1) % n
            lab_out = start + idx
            label_of_end[(ci, e)] = lab_in
            label_of_end[(ci, _THROUGH[e])] = lab_out
        label += n

    pd, signs, owner, odirs, udirs = [], [], [], [], []
    for i, (k, eps) in enumerate(word):
        over_is_nw_se = (eps > 0) != mirror
        (e1, c1), (e2, c2) = entries[i]
        if (e1 in ("NW", "SE")) == over_is_nw_se:
            (oe, oc), (ue, uc) = (e1, c1), (e2, c2)
        else:
            (oe, oc), (ue, uc) = (e2, c2), (e1, c1)
        od, ud = _DIR[oe], _DIR[ue]
        sign = 1 if od[0] * ud[1] - od[1] * ud[0] > 0 else -1
        start = _CCW.index(ue)
        tup = tuple(label_of_end[(i, _CCW[(start + j) % 4])] for j in range(4))
        pd.append(tup)
        signs.append(sign)
        owner.append((oc, uc))
        odirs.append(od)
        udirs.append(ud)
    return PlanarDiagram(list(word), pd, signs, len(traversals), owner, odirs, udirs,
                         traversals)


@lru_cache(maxsize=None)
def _diagram_cached(p: int, q: int, mirror: bool, orientation: str) -> PlanarDiagram:
    word = plat_word(p, q)
    flip = 1 if orientation == O2 else None
    return build_diagram(word, flip_component=flip, mirror=mirror)


def diagram(K: TwoBridge, orientation: str = O1) -> PlanarDiagram:
    if orientation not in orientation_classes(K):
        raise ValueError(f"orientation {orientation} invalid for {K}")
    if K.is_unknot:
        return PlanarDiagram([], [], [], 1, [], traversal=[[]])
    return _diagram_cached(K.p, K.q, not K.mirror, orientation)


def linking_number(K: TwoBridge, orientation: str = O1) -> int:
    """Linking number of a 2-component K(p, q) (half the signed inter-component crossings)."""
    if components(K) != 2:
        raise ValueError(f"{K} is a knot")
    D = diagram(K, orientation)
    total = sum(s for s, (a, b) in zip(D.signs, D.strand_component) if a != b)
    assert total % 2 == 0
    return total // 2


# ---------------------------------------------------------------------------
# faces, Goeritz matrix, Gordon-Litherland
# ---------------------------------------------------------------------------


def faces(pd: Sequence[Tuple[int, int, int, int]]) -> List[List[Tuple[int, int]]]:
    """Faces of a PD diagram as cycles of corners ``(crossing, slot)``.

    Corner ``(c, j)`` lies between slots ``j`` and ``j + 1`` (counter-clockwise).
    """
    where: Dict[int, List[Tuple[int, int]]] = {}
    for ci, x in enumerate(pd):
        for j, lab in enumerate(x):
            where.setdefault(lab, []).append((ci, j))
    seen = set()
    out = []
    for ci in range(len(pd)):
        for j in range(4):
            if (ci, j) in seen:
                continue
            face = []
            cur = (ci, j)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                c, s = cur
                slot = (s + 1) % 4
                lab = pd[c][slot]
                a, b = where[lab]
                nxt = b if a == (c, slot) else a
                cur = (nxt[0], nxt[1])
            out.append(face)
    return out


def _checkerboard(pd, fcs):
    """Colour faces 0/1 so faces sharing an edge differ."""
    n = len(fcs)
    corner_face = {}
    for fi, f in enumerate(fcs):
        for corner in f:
            corner_face[corner] = fi
    color = [None] * n
    color[0] = 0
    stack = [0]
    while stack:
        fi = stack.pop()
        for c, s in fcs[fi]:
            # across strand slot s+1 lies the corner (c, s+1)
            for nb in ((c, (s + 1) % 4), (c, (s - 1) % 4)):
                g = corner_face[nb]
                if color[g] is None:
                    color[g] = 1 - color[fi]
                    stack.append(g)
                elif color[g] == color[fi]:
                    raise AssertionError("diagram is not checkerboard colourable")
    return color, corner_face


def symmetric_signature(rows: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric rational matrix by exact congruence diagonalisation."""
    M = [[Fraction(x) for x in row] for row in rows]
    n = len(M)
    sig = 0
    for k in range(n):
        if M[k][k] == 0:
            piv = next((j for j in range(k + 1, n) if M[j][j] != 0), None)
            if piv is not None:
                M[k], M[piv] = M[piv], M[k]
                for row in M:
                    row[k], row[piv] = row[piv], row[k]
            else:
                j = next((j for j in range(k + 1, n) if M[k][j] != 0), None)
                if j is None:
                    continue  # zero row: contributes nothing
                # replace e_k by e_k + e_j: new (k,k) entry is 2*M[k][j]
                for col in range(n):
                    M[k][col] += M[j][col]
                for row in M:
                    row[k] += row[j]
        d = M[k][k]
        sig += 1 if d > 0 else -1
        for i in range(k + 1, n):
            f = M[i][k] / d
            if f:
                for col in range(k, n):
                    M[i][col] -= f * M[k][col]
        for i in range(k + 1, n):
            M[k][i] = Fraction(0)
    return sig


def _integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    M = [[Fraction(x) for x in row] for row in rows]
    n = len(M)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                for col in range(k, n):
                    M[i][col] -= f * M[k][col]
    return int(det)


def goeritz_data(D: PlanarDiagram, shade: int = 0):
    """Goeritz matrix (reduced) and Gordon-Litherland correction of ``D``.

    Faces of colour ``shade`` are shaded; the Goeritz matrix lives on the
    unshaded faces.  Returns ``(G, mu)``.
    """
    fcs = faces(D.pd)
    color, corner_face = _checkerboard(D.pd, fcs)
    white = [fi for fi in range(len(fcs)) if color[fi] != shade]
    index = {fi: n for n, fi in enumerate(white)}
    m = len(white)
    G = [[0] * m for _ in range(m)]
    mu = 0
    for ci, x in enumerate(D.pd):
        # slot 0 = incoming under, slot 2 = outgoing under; slots 1, 3 are over.
        # corners (c,0),(c,2) are to the right / left of the under strand.
        f0 = corner_face[(ci, 0)]
        f1 = corner_face[(ci, 1)]
        if color[f0] != shade:
            wa, wb = corner_face[(ci, 0)], corner_face[(ci, 2)]
            eta = 1
        else:
            wa, wb = corner_face[(ci, 1)], corner_face[(ci, 3)]
            eta = -1
        # Type II: the oriented resolution joins the two shaded corners.  A
        # positive crossing has its over strand leaving through slot 1, so the
        # resolution merges corners 1 and 3; a negative one merges 0 and 2.
        merged = 1 if D.signs[ci] > 0 else 0
        type2 = color[corner_face[(ci, merged)]] == shade
        if type2:
            mu += eta
        if wa == wb:
            continue
        a, b = index[wa], index[wb]
        G[a][b] -= eta
        G[b][a] -= eta
        G[a][a] += eta
        G[b][b] += eta
    reduced = [row[1:] for row in G[1:]]
    return reduced, mu


def signature_gordon_litherland(D: PlanarDiagram, shade: int = 0) -> int:
    if not D.pd:
        return 0
    G, mu = goeritz_data(D, shade)
    return symmetric_signature(G) - mu


def goeritz_determinant(D: PlanarDiagram) -> int:
    if not D.pd:
        return 1
    G, _ = goeritz_data(D)
    if not G:
        return 1
    return abs(_integer_determinant(G))


# ---------------------------------------------------------------------------
# Seifert-form signature from the even continued fraction
# ---------------------------------------------------------------------------


def _tridiagonal_signature(diag: Sequence[int]) -> int:
    """Signature of the tridiagonal form with the given diagonal and unit off-diagonal."""
    sig = 0
    pivot: Optional[Fraction] = None
    for d in reversed(diag):
        pivot = Fraction(d) if pivot is None else d - 1 / pivot
        if pivot == 0:
            raise ArithmeticError("degenerate pivot")
        sig += 1 if pivot > 0 else -1
    return sig


def signature_seifert(K: TwoBridge, orientation: str = O1) -> int:
    """Signature from the plumbed Seifert surface of the even continued fraction.

    ``p/q`` with ``p + q`` odd expands as ``[c1, ..., cm]``; the surface is a
    linear plumbing of bands and ``V + V^T`` is congruent to the tridiagonal
    matrix with diagonal ``(c1, -c2, c3, ...)`` and unit off-diagonal.  Its
    boundary orientation is ``o1`` for links; ``o2`` uses ``q - p``.
    """
    if K.is_unknot:
        return 0
    p, q = K.p, K.q
    if orientation == O2:
        if components(K) != 2:
            raise ValueError("o2 only exists for links")
        q = q - p
    cf = even_continued_fraction(p, q)
    diag = [c if j % 2 == 0 else -c for j, c in enumerate(cf)]
    s = _tridiagonal_signature(diag)
    return -s if K.mirror else s


def signature(K: TwoBridge, orientation: str = O1) -> int:
    if orientation not in orientation_classes(K):
        raise ValueError(f"orientation {orientation} invalid for {K}")
    return signature_seifert(K, orientation)
