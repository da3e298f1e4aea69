import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from _fixtures import leafless_graph, stabilized_sphere
from lensjones.orderability import (
    BipartiteMultigraph,
    Edge,
    GroupPresentation,
    HeegaardDiagram,
    MINUS,
    NoLeaf,
    PLUS,
    PreconditionViolated,
    STAR,
    SignSymbol,
    SingularMatrix,
    ZERO,
    check_formal_determinant,
    check_notLO,
    destabilize_leaf,
    epsilon_matrix,
    generator_count,
    homology_order,
    is_strong,
    lens_diagram,
    normalize_orientation,
    parse_sign_matrix,
    perfect_matchings,
    permanent,
    presentation_from_heegaard,
    reduce_to_genus_one,
    sign_mul,
    stabilize,
    unique_matching_cycle_check,
)

symbols = st.sampled_from(list(SignSymbol))


def test_sign_mul_examples():
    assert sign_mul(ZERO, STAR) is ZERO
    assert sign_mul(MINUS, MINUS) is PLUS
    assert sign_mul(PLUS, STAR) is STAR


def test_sign_mul_commutative_associative():
    S = list(SignSymbol)
    for x, y, z in product(S, S, S):
        assert sign_mul(x, y) is sign_mul(y, x)
        assert sign_mul(sign_mul(x, y), z) is sign_mul(x, sign_mul(y, z))


def pres(m, *words):
    return GroupPresentation.from_json({"generators": m, "relators": [list(w) for w in words]})


def test_epsilon_examples():
    for p in range(1, 6):
        assert epsilon_matrix(pres(1, [f"x1^{p}"])) == ((PLUS,),)
    assert epsilon_matrix(pres(1, ["x1", "x1^-1"])) == ((STAR,),)
    assert epsilon_matrix(pres(2, ["x1", "x2"], ["x1^-1", "x2"])) == ((PLUS, MINUS), (PLUS, PLUS))


def test_presentation_json_round_trip():
    G = pres(2, ["x1^2", "x2^-1"], [])
    assert G.relators == (((0, 1), (0, 1), (1, -1)), ())
    assert GroupPresentation.from_json(G.to_json()) == G
    with pytest.raises(ValueError):
        pres(1, ["x2"])
    with pytest.raises(ValueError):
        pres(1, ["y1"])


def test_notLO_examples():
    assert check_notLO(((PLUS,),)).obstructed
    v = check_notLO(((STAR,),))
    assert not v.obstructed and v.witness == (PLUS,)
    v = check_notLO(parse_sign_matrix([["+", "-"], ["+", "+"]]))
    assert v.obstructed and v.checked == 8


def test_formal_determinant_examples():
    assert check_formal_determinant(((PLUS,),)).passed
    v = check_formal_determinant(parse_sign_matrix([["+", "-"], ["+", "+"]]))
    assert v.passed and v.summands == 2 and v.sign is PLUS
    v = check_formal_determinant(parse_sign_matrix([["+", "*"], ["*", "+"]]))
    assert not v.passed and v.reason == "star-in-summand"
    v = check_formal_determinant(parse_sign_matrix([["+", "+"], ["+", "+"]]))
    assert not v.passed and v.reason == "mixed-signs"
    v = check_formal_determinant(parse_sign_matrix([["0", "+"], ["0", "+"]]))
    assert not v.passed and v.reason == "no-nonzero-summand"
    with pytest.raises(ValueError):
        check_formal_determinant(parse_sign_matrix([["+", "+"]]))


def _violations(E):
    """Conditions broken by the full n!-term expansion."""
    n = len(E)
    signs = set()
    for perm in permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = PLUS if inv % 2 == 0 else MINUS
        for i in range(n):
            term = sign_mul(term, E[i][perm[i]])
        if term is not ZERO:
            signs.add(term)
    out = set()
    if not signs:
        out.add("no-nonzero-summand")
    if STAR in signs:
        out.add("star-in-summand")
    if len(signs - {STAR}) > 1:
        out.add("mixed-signs")
    return out


square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(symbols, min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=300)
@given(square)
def test_formal_determinant_matches_full_expansion(rows):
    E = tuple(tuple(r) for r in rows)
    v = check_formal_determinant(E)
    broken = _violations(E)
    assert v.passed == (not broken)
    if broken:
        assert v.reason in broken


@settings(max_examples=200)
@given(square, st.randoms(use_true_random=False))
def test_formal_determinant_relabeling_invariance(rows, rnd):
    E = tuple(tuple(r) for r in rows)
    n = len(E)
    perm = list(range(n))
    rnd.shuffle(perm)
    F = tuple(tuple(E[perm[i]][perm[j]] for j in range(n)) for i in range(n))
    assert check_formal_determinant(E).passed == check_formal_determinant(F).passed


def test_heegaard_examples():
    S3 = lens_diagram(1)
    assert presentation_from_heegaard(S3).relators == (((0, 1),),)
    assert generator_count(S3) == 1 and is_strong(S3)
    for p in range(2, 8):
        L = lens_diagram(p)
        assert generator_count(L) == p == homology_order(L) and is_strong(L)
    mixed = HeegaardDiagram(2, (((0, 1), (0, -1), (1, 1)), ((0, 1),)))
    assert epsilon_matrix(presentation_from_heegaard(mixed))[0][0] is STAR


def test_not_strong_fixture():
    # a cancelling pair of points on alpha_1 x beta_1
    H = HeegaardDiagram(2, (((0, 1), (0, 1), (0, -1)), ((1, 1),)))
    assert generator_count(H) == 3 and homology_order(H) == 1
    assert not is_strong(H)


def test_singular_matrix():
    H = HeegaardDiagram(1, (((0, 1), (0, -1)),))
    with pytest.raises(SingularMatrix):
        is_strong(H)


def test_heegaard_json():
    H = HeegaardDiagram.from_json({"genus": 2, "beta": [[[1, 1], [2, -1]], [[2, 1]]]})
    assert H.beta == (((0, 1), (1, -1)), ((1, 1),))
    assert HeegaardDiagram.from_json(H.to_json()) == H
    with pytest.raises(ValueError):
        HeegaardDiagram.from_json({"genus": 1, "beta": [[[2, 1]]]})


def test_orientation_normalization():
    H = HeegaardDiagram(2, (((0, 1), (1, 1)), ((0, 1),)))
    Hn, flipped = normalize_orientation(H)
    assert flipped and Hn.signed_matrix()[0] == [-1, -1]
    assert normalize_orientation(Hn) == (Hn, False)


def test_perfect_matching_examples():
    assert len(perfect_matchings(BipartiteMultigraph(1, (Edge(0, 0),)))) == 1
    K22 = BipartiteMultigraph(2, tuple(Edge(a, b) for a in range(2) for b in range(2)))
    assert len(perfect_matchings(K22)) == 2
    assert len(perfect_matchings(lens_diagram(5).graph())) == 5


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda g: st.lists(st.lists(st.integers(0, 3), min_size=g, max_size=g), min_size=g, max_size=g)))
def test_matchings_count_is_permanent(C):
    g = len(C)
    edges = tuple(Edge(a, b, 1, (a, b, k)) for a in range(g) for b in range(g) for k in range(C[a][b]))
    assert len(perfect_matchings(BipartiteMultigraph(g, edges))) == permanent(C)


def test_destabilize_examples():
    L = lens_diagram(3)
    H = stabilize(L, [(0, 1), (0, -1)])
    assert H.genus == 2 and generator_count(H) == 3
    back = destabilize_leaf(H)
    assert back.genus == 1 and generator_count(back) == 3
    with pytest.raises(PreconditionViolated):
        destabilize_leaf(lens_diagram(1))
    leafless = HeegaardDiagram(2, (((0, 1), (1, 1)), ((0, 1), (1, -1))))
    with pytest.raises(NoLeaf):
        destabilize_leaf(leafless)


@pytest.mark.parametrize("seed", range(20))
def test_iterated_destabilization(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 5)
    H = stabilized_sphere(k, rng)
    chain = reduce_to_genus_one(H)
    assert [h.genus for h in chain] == list(range(k + 1, 0, -1))
    for h in chain[:-1]:
        assert unique_matching_cycle_check(h.graph()).leaf_found


def test_cycle_check_examples():
    assert unique_matching_cycle_check(BipartiteMultigraph(1, (Edge(0, 0),))).leaf_found
    G = BipartiteMultigraph(2, tuple(Edge(a, b) for a in range(2) for b in range(2)))
    with pytest.raises(PreconditionViolated):
        unique_matching_cycle_check(G)
    mu = (G.edges[0], G.edges[3])
    res = unique_matching_cycle_check(G, mu)
    assert res.second_matching == (G.edges[1], G.edges[2])
    with pytest.raises(PreconditionViolated):
        unique_matching_cycle_check(G, (G.edges[0], G.edges[1]))


@pytest.mark.parametrize("seed", range(30))
def test_leafless_graphs_have_second_matching(seed):
    rng = random.Random(seed)
    G, mu = leafless_graph(rng.randint(1, 7), rng)
    res = unique_matching_cycle_check(G, mu)
    assert res.second_matching is not None
    assert len(perfect_matchings(G)) >= 2
