"""Sign-matrix obstructions to left-orderability and Heegaard-diagram combinatorics.

A group presentation gives a generators-by-relators matrix over the symbols
``0, +, -, *`` (which sign a generator can contribute to a relator).  Two
tests read an obstruction off that matrix: the row-scaling test, which tries
every sign assignment of the generators, and the formal-determinant test for
square presentations.  Heegaard diagrams enter only through their
intersection data: which alpha circle each point of a beta circle lies on,
and with what local sign.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple


class SignSymbol(str, Enum):
    ZERO = "0"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, s: str) -> "SignSymbol":
        return cls({"−": "-"}.get(s, s))


ZERO, PLUS, MINUS, STAR = SignSymbol.ZERO, SignSymbol.PLUS, SignSymbol.MINUS, SignSymbol.STAR


def sign_mul(x: SignSymbol, y: SignSymbol) -> SignSymbol:
    if x is ZERO or y is ZERO:
        return ZERO
    if x is STAR or y is STAR:
        return STAR
    return PLUS if x is y else MINUS


def sign_prod(items: Iterable[SignSymbol]) -> SignSymbol:
    out = PLUS
    for s in items:
        out = sign_mul(out, s)
    return out


# ---------------------------------------------------------------------------
# presentations and sign matrices
# ---------------------------------------------------------------------------

Letter = Tuple[int, int]  # (generator index from 0, exponent +1 or -1)


@dataclass(frozen=True)
class GroupPresentation:
    generators: int
    relators: Tuple[Tuple[Letter, ...], ...]

    def __post_init__(self):
        rels = tuple(tuple((int(g), int(e)) for g, e in word) for word in self.relators)
        for word in rels:
            for g, e in word:
                if not 0 <= g < self.generators:
                    raise ValueError(f"generator index {g} out of range")
                if e not in (1, -1):
                    raise ValueError("exponents must be +1 or -1 (expand powers first)")
        object.__setattr__(self, "relators", rels)

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "GroupPresentation":
        m = int(data["generators"])
        words = []
        for rel in data["relators"]:
            word: List[Letter] = []
            for tok in rel:
                word.extend(_parse_token(str(tok)))
            words.append(tuple(word))
        return cls(m, tuple(words))

    def to_json(self) -> Dict[str, object]:
        return {
            "generators": self.generators,
            "relators": [
                [f"x{g + 1}" if e == 1 else f"x{g + 1}^-1" for g, e in word]
                for word in self.relators
            ],
        }

    def __str__(self) -> str:
        def word(w):
            return " ".join(f"x{g + 1}" + ("" if e == 1 else "^-1") for g, e in w) or "1"

        gens = ", ".join(f"x{i + 1}" for i in range(self.generators))
        return f"<{gens} | " + ", ".join(word(w) for w in self.relators) + ">"


def _parse_token(tok: str) -> List[Letter]:
    """``x3`` -> ``[(2, 1)]``, ``x3^-2`` -> ``[(2, -1), (2, -1)]``."""
    tok = tok.strip()
    base, _, power = tok.partition("^")
    if not base.startswith("x") or not base[1:].isdigit():
        raise ValueError(f"bad letter {tok!r}; expected x<k> or x<k>^<n>")
    g = int(base[1:]) - 1
    n = int(power) if power else 1
    if n == 0 or g < 0:
        raise ValueError(f"bad letter {tok!r}")
    return [(g, 1 if n > 0 else -1)] * abs(n)


SignMatrix = Tuple[Tuple[SignSymbol, ...], ...]


def epsilon_matrix(G: GroupPresentation) -> SignMatrix:
    """Rows are generators, columns relators."""
    rows = []
    for i in range(G.generators):
        row = []
        for word in G.relators:
            pos = any(g == i and e == 1 for g, e in word)
            neg = any(g == i and e == -1 for g, e in word)
            row.append(STAR if pos and neg else PLUS if pos else MINUS if neg else ZERO)
        rows.append(tuple(row))
    return tuple(rows)


def parse_sign_matrix(rows: Sequence[Sequence[str]]) -> SignMatrix:
    return tuple(tuple(SignSymbol.parse(x) for x in row) for row in rows)


def format_sign_matrix(E: SignMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in E)


@dataclass(frozen=True)
class NotLOVerdict:
    obstructed: bool
    witness: Optional[Tuple[SignSymbol, ...]] = None
    checked: int = 0

    def to_json(self) -> Dict[str, object]:
        return {
            "verdict": "obstructed" if self.obstructed else "inconclusive",
            "witness": [str(x) for x in self.witness] if self.witness else None,
            "vectors_checked": self.checked,
        }


def _uniform_column(M: Sequence[Sequence[SignSymbol]], j: int) -> bool:
    seen = {row[j] for row in M} - {ZERO}
    return seen in ({PLUS}, {MINUS})


def check_notLO(E: SignMatrix) -> NotLOVerdict:
    """Row-scaling test over all ``3^m - 1`` nonzero sign vectors.

    Obstructed when every scaled matrix has a nonzero column whose nonzero
    entries share one sign; otherwise the first failing vector is returned.
    """
    m = len(E)
    n = len(E[0]) if m else 0
    checked = 0
    for d in product((ZERO, PLUS, MINUS), repeat=m):
        if all(x is ZERO for x in d):
            continue
        checked += 1
        M = [[sign_mul(d[i], E[i][j]) for j in range(n)] for i in range(m)]
        if not any(_uniform_column(M, j) for j in range(n)):
            return NotLOVerdict(False, tuple(d), checked)
    return NotLOVerdict(True, None, checked)


def permutation_sign(perm: Sequence[int]) -> SignSymbol:
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        parity += length - 1
    return PLUS if parity % 2 == 0 else MINUS


def support_permutations(E: SignMatrix) -> Iterator[Tuple[int, ...]]:
    """Permutations ``s`` with every ``E[i][s(i)]`` nonzero, by backtracking."""
    n = len(E)
    cols = [[j for j in range(n) if E[i][j] is not ZERO] for i in range(n)]
    chosen: List[int] = []
    used = [False] * n

    def rec(i: int):
        if i == n:
            yield tuple(chosen)
            return
        for j in cols[i]:
            if not used[j]:
                used[j] = True
                chosen.append(j)
                yield from rec(i + 1)
                chosen.pop()
                used[j] = False

    yield from rec(0)


@dataclass(frozen=True)
class DeterminantVerdict:
    passed: bool
    reason: Optional[str] = None  # "no-nonzero-summand", "star-in-summand", "mixed-signs"
    witnesses: Tuple[Tuple[int, ...], ...] = ()
    summands: int = 0
    sign: Optional[SignSymbol] = None

    def to_json(self) -> Dict[str, object]:
        return {
            "verdict": "pass" if self.passed else "fail",
            "reason": self.reason,
            "witnesses": [list(w) for w in self.witnesses],
            "nonzero_summands": self.summands,
            "sign": str(self.sign) if self.sign else None,
        }


def check_formal_determinant(E: SignMatrix) -> DeterminantVerdict:
    """Check that the formal determinant has a nonzero summand, no ``*`` in any
    nonzero summand, and a single sign across all of them."""
    n = len(E)
    if any(len(row) != n for row in E):
        raise ValueError("the formal determinant needs a square matrix")
    first: Optional[Tuple[Tuple[int, ...], SignSymbol]] = None
    count = 0
    for perm in support_permutations(E):
        count += 1
        term = sign_mul(permutation_sign(perm), sign_prod(E[i][perm[i]] for i in range(n)))
        if term is STAR:
            return DeterminantVerdict(False, "star-in-summand", (perm,), count)
        if first is None:
            first = (perm, term)
        elif term is not first[1]:
            return DeterminantVerdict(False, "mixed-signs", (first[0], perm), count)
    if first is None:
        return DeterminantVerdict(False, "no-nonzero-summand")
    return DeterminantVerdict(True, None, (first[0],), count, first[1])


# ---------------------------------------------------------------------------
# Heegaard diagrams (combinatorial data only)
# ---------------------------------------------------------------------------


class SingularMatrix(ValueError):
    """The signed intersection matrix is singular (not a rational homology sphere)."""


class NoLeaf(ValueError):
    """The intersection graph has no 1-valent vertex."""


class PreconditionViolated(ValueError):
    pass


Point = Tuple[int, int]  # (alpha index from 0, local sign)


@dataclass(frozen=True)
class HeegaardDiagram:
    """For each beta circle, its intersections with the alpha circles in order."""

    genus: int
    beta: Tuple[Tuple[Point, ...], ...]

    def __post_init__(self):
        beta = tuple(tuple((int(a), int(s)) for a, s in circle) for circle in self.beta)
        if len(beta) != self.genus:
            raise ValueError(f"expected {self.genus} beta circles, got {len(beta)}")
        for circle in beta:
            for a, s in circle:
                if not 0 <= a < self.genus or s not in (1, -1):
                    raise ValueError(f"bad intersection point ({a}, {s})")
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "HeegaardDiagram":
        """``{"genus": g, "beta": [[[alpha, sign], ...], ...]}`` with 1-based alpha indices."""
        g = int(data["genus"])
        beta = tuple(tuple((int(a) - 1, int(s)) for a, s in circle) for circle in data["beta"])
        return cls(g, beta)

    def to_json(self) -> Dict[str, object]:
        return {"genus": self.genus,
                "beta": [[[a + 1, s] for a, s in circle] for circle in self.beta]}

    def signed_matrix(self) -> List[List[int]]:
        """``S[i][j]``: sum of local signs over alpha_i meet beta_j."""
        S = [[0] * self.genus for _ in range(self.genus)]
        for j, circle in enumerate(self.beta):
            for a, s in circle:
                S[a][j] += s
        return S

    def count_matrix(self) -> List[List[int]]:
        C = [[0] * self.genus for _ in range(self.genus)]
        for j, circle in enumerate(self.beta):
            for a, _ in circle:
                C[a][j] += 1
        return C

    def graph(self) -> "BipartiteMultigraph":
        edges = []
        for j, circle in enumerate(self.beta):
            for pos, (a, s) in enumerate(circle):
                edges.append(Edge(a, j, s, (j, pos)))
        return BipartiteMultigraph(self.genus, tuple(edges))


def presentation_from_heegaard(H: HeegaardDiagram) -> GroupPresentation:
    """One generator per alpha circle; relator ``j`` reads off beta_j in order."""
    return GroupPresentation(H.genus, tuple(tuple(circle) for circle in H.beta))


def _det(M: List[List[int]]) -> int:
    """Integer determinant by fraction-free elimination (Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1]


def permanent(C: List[List[int]]) -> int:
    """Permanent by Ryser's formula (fine for the small genera used here)."""
    n = len(C)
    if n == 0:
        return 1
    total = 0
    for mask in range(1, 1 << n):
        prod = 1
        for row in C:
            prod *= sum(row[j] for j in range(n) if mask >> j & 1)
            if prod == 0:
                break
        total += (-1) ** (n - bin(mask).count("1")) * prod
    return total


def generator_count(H: HeegaardDiagram) -> int:
    """Number of intersection tuples of the two tori (perfect matchings)."""
    return permanent(H.count_matrix())


def tuple_gradings(H: HeegaardDiagram) -> List[int]:
    """Local sign of every tuple: permutation sign times the product of point signs."""
    out = []
    for matching in perfect_matchings(H.graph()):
        perm = [0] * H.genus
        s = 1
        for e in matching:
            perm[e.a] = e.b
            s *= e.sign
        out.append(s if permutation_sign(perm) is PLUS else -s)
    return out


def homology_order(H: HeegaardDiagram) -> int:
    det = _det(H.signed_matrix())
    if det == 0:
        raise SingularMatrix("signed intersection matrix is singular")
    return abs(det)


def is_strong(H: HeegaardDiagram) -> bool:
    """Generator count equals ``|H_1|``; then every tuple has the same grading."""
    order = homology_order(H)
    strong = generator_count(H) == order
    if strong:
        grades = set(tuple_gradings(H))
        assert len(grades) == 1, f"strong diagram with mixed gradings {grades}"
    return strong


def normalize_orientation(H: HeegaardDiagram) -> Tuple[HeegaardDiagram, bool]:
    """Flip all signs on alpha_1 if needed so that the Euler characteristic is positive."""
    if _det(H.signed_matrix()) >= 0:
        return H, False
    beta = tuple(tuple((a, -s if a == 0 else s) for a, s in circle) for circle in H.beta)
    return HeegaardDiagram(H.genus, beta), True


def lens_diagram(p: int, sign: int = 1) -> HeegaardDiagram:
    """Genus-1 diagram with ``p`` same-sign points (``p = 1`` is the 3-sphere)."""
    if p < 1:
        raise ValueError("p must be positive")
    return HeegaardDiagram(1, (((0, sign),) * p,))


# ---------------------------------------------------------------------------
# the intersection graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    sign: int = 1
    label: object = None


@dataclass(frozen=True)
class BipartiteMultigraph:
    size: int
    edges: Tuple[Edge, ...]

    def degree(self, side: str, v: int) -> int:
        return sum(1 for e in self.edges if (e.a if side == "A" else e.b) == v)

    def count_matrix(self) -> List[List[int]]:
        C = [[0] * self.size for _ in range(self.size)]
        for e in self.edges:
            C[e.a][e.b] += 1
        return C

    def leaves(self) -> List[Tuple[str, int]]:
        out = [("A", v) for v in range(self.size) if self.degree("A", v) == 1]
        out += [("B", v) for v in range(self.size) if self.degree("B", v) == 1]
        return out


Matching = Tuple[Edge, ...]


def perfect_matchings(G: BipartiteMultigraph) -> List[Matching]:
    """All perfect matchings (parallel edges give distinct matchings)."""
    by_a: List[List[Edge]] = [[] for _ in range(G.size)]
    for e in G.edges:
        by_a[e.a].append(e)
    out: List[Matching] = []
    used = [False] * G.size
    chosen: List[Edge] = []

    def rec(a: int):
        if a == G.size:
            out.append(tuple(chosen))
            return
        for e in by_a[a]:
            if not used[e.b]:
                used[e.b] = True
                chosen.append(e)
                rec(a + 1)
                chosen.pop()
                used[e.b] = False

    rec(0)
    return out


def is_perfect_matching(G: BipartiteMultigraph, M: Iterable[Edge]) -> bool:
    M = list(M)
    return (len(M) == G.size and all(e in G.edges for e in M)
            and len({e.a for e in M}) == G.size and len({e.b for e in M}) == G.size
            and len(set(id(e) for e in M)) == len(M))


def destabilize_leaf(H: HeegaardDiagram) -> HeegaardDiagram:
    """Remove a leaf's alpha circle and the beta circle it meets.

    Every tuple uses the leaf edge, so the generator count is unchanged.
    """
    if H.genus <= 1:
        raise PreconditionViolated("destabilization needs genus > 1")
    G = H.graph()
    leaves = G.leaves()
    if not leaves:
        raise NoLeaf("the intersection graph has no 1-valent vertex")
    side, v = leaves[0]
    edge = next(e for e in G.edges if (e.a if side == "A" else e.b) == v)
    ai, bj = edge.a, edge.b
    renumber = {a: a - (a > ai) for a in range(H.genus) if a != ai}
    beta = tuple(
        tuple((renumber[a], s) for a, s in circle if a != ai)
        for j, circle in enumerate(H.beta) if j != bj
    )
    out = HeegaardDiagram(H.genus - 1, beta)
    before, after = generator_count(H), generator_count(out)
    assert before == after, f"destabilization changed the generator count {before} -> {after}"
    return out


def stabilize(H: HeegaardDiagram, extra: Sequence[Point] = (), leaf_side: str = "A",
              rng=None) -> HeegaardDiagram:
    """Add an alpha/beta pair meeting once.

    ``extra`` adds points where the new circle on the other side meets old
    circles: with ``leaf_side="A"`` the new beta circle also crosses the old
    alpha circles listed (alpha index, sign); with ``"B"`` the new alpha
    circle crosses the listed old beta circles (beta index, sign).  The new
    alpha stays 1-valent in the first case and the new beta in the second.
    """
    g = H.genus
    new_beta = [list(c) for c in H.beta]
    if leaf_side == "A":
        circle = [(g, 1)] + [(a, s) for a, s in extra]
        if rng is not None:
            rng.shuffle(circle)
        new_beta.append(circle)
    else:
        for b, s in extra:
            new_beta[b].insert(rng.randrange(len(new_beta[b]) + 1) if rng else 0, (g, s))
        new_beta.append([(g, 1)])
    return HeegaardDiagram(g + 1, tuple(tuple(c) for c in new_beta))


def relabel(H: HeegaardDiagram, alpha_perm: Sequence[int], beta_perm: Sequence[int]) -> HeegaardDiagram:
    """Rename alpha ``i`` to ``alpha_perm[i]`` and move beta ``j`` to slot ``beta_perm[j]``."""
    beta: List[Tuple[Point, ...]] = [()] * H.genus
    for j, circle in enumerate(H.beta):
        beta[beta_perm[j]] = tuple((alpha_perm[a], s) for a, s in circle)
    return HeegaardDiagram(H.genus, tuple(beta))


@dataclass(frozen=True)
class CycleCheck:
    """Either a leaf of the graph, or a second perfect matching."""

    leaf: Optional[Tuple[str, int]] = None
    second_matching: Optional[Matching] = None
    cycle: Tuple[Edge, ...] = ()

    @property
    def leaf_found(self) -> bool:
        return self.leaf is not None


def unique_matching_cycle_check(G: BipartiteMultigraph,
                                mu: Optional[Sequence[Edge]] = None) -> CycleCheck:
    """Run the directed-cycle argument for a matching claimed to be unique.

    Matching edges point from A to B and all others from B to A.  If the
    graph has a leaf it is returned.  Otherwise every vertex has an incoming
    edge, so walking backwards must close a directed cycle, and swapping the
    cycle's edges in and out of ``mu`` gives a different perfect matching,
    which refutes the uniqueness claim.

    Without ``mu`` the graph must have exactly one perfect matching, which is
    then used.  Passing ``mu`` skips that count and treats ``mu`` as the
    claimed unique matching.
    """
    if mu is None:
        found = perfect_matchings(G)
        if len(found) != 1:
            raise PreconditionViolated(f"graph has {len(found)} perfect matchings, not 1")
        mu = found[0]
    mu = tuple(mu)
    if not is_perfect_matching(G, mu):
        raise PreconditionViolated("mu is not a perfect matching of the graph")
    leaves = G.leaves()
    if leaves:
        return CycleCheck(leaf=leaves[0])
    in_mu = set(id(e) for e in mu)
    match_of_b = {e.b: e for e in mu}
    # incoming edge of an A vertex: any non-matching edge at it (B -> A)
    incoming_a: Dict[int, Edge] = {}
    for e in G.edges:
        if id(e) not in in_mu and e.a not in incoming_a:
            incoming_a[e.a] = e
    # walk backwards from A_0: A <- B (non-matching), B <- A (matching)
    order: List[Tuple[str, int]] = []
    via: List[Edge] = []
    pos: Dict[Tuple[str, int], int] = {}
    v: Tuple[str, int] = ("A", 0)
    while v not in pos:
        pos[v] = len(order)
        order.append(v)
        side, x = v
        e = incoming_a[x] if side == "A" else match_of_b[x]
        via.append(e)
        v = ("B", e.b) if side == "A" else ("A", e.a)
    cycle = tuple(via[pos[v]:])
    cyc_ids = set(id(e) for e in cycle)
    second = tuple(sorted(
        [e for e in mu if id(e) not in cyc_ids] + [e for e in cycle if id(e) not in in_mu],
        key=lambda e: e.a))
    assert is_perfect_matching(G, second) and set(map(id, second)) != in_mu
    return CycleCheck(second_matching=second, cycle=cycle)


def reduce_to_genus_one(H: HeegaardDiagram) -> List[HeegaardDiagram]:
    """Destabilize a one-generator diagram until genus 1, using the cycle check each step."""
    chain = [H]
    while H.genus > 1:
        res = unique_matching_cycle_check(H.graph())
        assert res.leaf_found, "unique matching without a leaf"
        H = destabilize_leaf(H)
        chain.append(H)
    return chain


def load_json(path: str) -> Dict[str, object]:
    with open(path) as fh:
        return json.load(fh)
