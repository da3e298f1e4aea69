from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from lensjones.bracket import bracket_state_sum, plat_bracket
from lensjones.twobridge import (
    O1,
    O2,
    TwoBridge,
    canonical,
    components,
    diagram,
    goeritz_determinant,
    linking_number,
    normalize,
    orientation_classes,
    plat_word,
    signature,
    signature_gordon_litherland,
    signature_seifert,
)


def links(pmax):
    out = [TwoBridge(1, 0)]
    for p in range(2, pmax + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                out += [TwoBridge(p, q), TwoBridge(p, q, True)]
    return out


link_strategy = st.sampled_from(links(40))


def test_normalize_examples():
    assert normalize(1, 0) == TwoBridge(1, 0)
    assert normalize(5, 7) == TwoBridge(5, 2)
    # a negative q is a reflection; K(3, -1) is the mirror trefoil, i.e. K(3, 2)
    K = normalize(3, -1)
    assert K == TwoBridge(3, 1, True)
    assert signature(K) == signature(TwoBridge(3, 2)) == 2
    with pytest.raises(ValueError):
        normalize(4, 2)


def test_components_and_orientations():
    assert components(TwoBridge(2, 1)) == 2 and orientation_classes(TwoBridge(2, 1)) == [O1, O2]
    assert components(TwoBridge(7, 3)) == 1 and orientation_classes(TwoBridge(7, 3)) == [O1]


def test_trefoil_signature():
    assert signature(TwoBridge(3, 1)) == -2
    assert signature(TwoBridge(3, 1, True)) == 2


def test_hopf_link():
    H = TwoBridge(2, 1)
    assert abs(linking_number(H, O1)) == 1
    assert linking_number(H, O2) == -linking_number(H, O1)


@settings(max_examples=200, deadline=None)
@given(link_strategy)
def test_signature_two_ways(K):
    for o in orientation_classes(K):
        assert signature_gordon_litherland(diagram(K, o)) == signature_seifert(K, o)


@settings(max_examples=200, deadline=None)
@given(link_strategy)
def test_mirror_negates_signature(K):
    for o in orientation_classes(K):
        assert signature(K.mirrored(), o) == -signature(K, o)


@settings(max_examples=200, deadline=None)
@given(link_strategy)
def test_goeritz_determinant_is_p(K):
    assert goeritz_determinant(diagram(K)) == K.p


@settings(max_examples=200, deadline=None)
@given(link_strategy)
def test_signature_parity(K):
    # sigma = components - 1 (mod 2)
    assert (signature(K) + components(K) - 1) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(link_strategy)
def test_canonical_is_same_link(K):
    C = canonical(K)
    assert C.p == K.p
    for o in orientation_classes(K):
        if components(K) == 1:
            assert signature(C) == signature(K)
    if K.p % 2 == 1 and K.p > 1:
        assert C.q % 2 == 0


def test_crossing_count_is_cf_sum():
    assert len(plat_word(3, 1)) == 3
    assert len(plat_word(7, 3)) == 2 + 3


@pytest.mark.parametrize("p,q", [(3, 1), (5, 2), (7, 3), (8, 3), (11, 4)])
def test_transfer_bracket_matches_state_sum(p, q):
    word = plat_word(p, q)
    for mirror in (False, True):
        assert plat_bracket(word, mirror) == bracket_state_sum(word, mirror)


def test_linking_number_changes_sign_under_reversal():
    for K in links(20):
        if components(K) == 2:
            assert linking_number(K, O2) == -linking_number(K, O1)
