import json
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from lensjones.exactmath import GaussLaurent
from lensjones.jones import (
    CORRECTED,
    LITERAL,
    CalibrationFailure,
    ConventionRecord,
    DecompositionFailure,
    GradingSet,
    MismatchReport,
    calibrate_conventions,
    corrected_lhs,
    corrected_rhs,
    determinant_from_jones,
    first_failure,
    frozen_convention,
    grading_set_from_jones,
    grading_set_skein,
    jones_bracket,
    positive_form,
    seed_family,
    skein_children,
    theorem_lhs,
    theorem_rhs,
    verify_skeinproof,
)
from lensjones.twobridge import O1, O2, TwoBridge, components, linking_number, signature

ALL = [K for K, o in seed_family(40) if o == O1]


def test_unknot():
    U = TwoBridge(1, 0)
    assert jones_bracket(U) == GaussLaurent({0: 1})
    assert grading_set_skein(U).elements == (0,)
    assert grading_set_from_jones(GaussLaurent({0: 1}), 0).elements == (0,)
    assert theorem_lhs(U) == GaussLaurent({0: 1})


def test_trefoil():
    J = jones_bracket(TwoBridge(3, 1))
    assert J == GaussLaurent({2: 1, 6: 1, 8: -1})
    M = grading_set_skein(TwoBridge(3, 1))
    assert M.c == (-signature(TwoBridge(3, 1)),)


def test_hopf_c_elements():
    H = TwoBridge(2, 1)
    for o in (O1, O2):
        M = grading_set_skein(H, o)
        sig, lk = signature(H, o), linking_number(H, o)
        assert M.c == (-sig, 4 * lk - sig)
        assert len(M) == 2


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL))
def test_mirror_substitutes_q_inverse(K):
    assert jones_bracket(K.mirrored()) == jones_bracket(K).substitute_q_inverse()


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL))
def test_determinant_specialisation(K):
    assert determinant_from_jones(jones_bracket(K)) == K.p


def test_skein_children_of_trefoil():
    step = skein_children(positive_form(TwoBridge(3, 1)))
    assert {(step.K0.p, step.K0.q), (step.K1.p, step.K1.q)} == {(2, 1), (1, 0)}


def test_skein_requires_positive_form():
    with pytest.raises(ValueError):
        skein_children(TwoBridge(5, 2))
    with pytest.raises(ValueError):
        skein_children(TwoBridge(1, 0))


def test_decomposition_failure():
    with pytest.raises(DecompositionFailure):
        grading_set_from_jones(GaussLaurent({0: 1, 1: 1}), 0)
    with pytest.raises(DecompositionFailure):
        grading_set_from_jones(GaussLaurent({0: (0, 1)}), 0)


def test_grading_set_checks_c():
    with pytest.raises(ValueError):
        GradingSet((0, 2), (4,))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL))
def test_size_of_grading_set(K):
    # one c-element per component; every K-block adds 2 to the determinant
    M = grading_set_skein(K)
    assert len(M.c) == components(K)
    assert 2 * len(M.d) + 2 ** (components(K) - 1) == K.p or K.p == 1


def test_frozen_record():
    conv = frozen_convention()
    assert conv == ConventionRecord("+", "non-spin", "as-built", "low", CORRECTED, "1")
    assert ConventionRecord.from_json(json.loads(json.dumps(conv.to_json()))) == conv


def test_calibration_report():
    res = calibrate_conventions(12)
    assert res.literal_survivors() == []
    # every failure is localised with both sides
    for conv, fail in res.literal:
        assert fail is not None and fail.lhs is not None
        assert (fail.K.p, fail.K.q) in {(1, 0), (2, 1)}
    survivors = [c for c, f in res.corrected if f is None]
    assert {(c.i_sign, c.spinc_sum, c.chirality) for c in survivors} == {("+", "non-spin", "as-built")}
    assert res.inert_axes == ["odd_p_endpoint"]
    assert res.record == frozen_convention()
    report = json.loads(json.dumps(res.to_json()))
    assert report["literal_survivors"] == 0
    with pytest.raises(CalibrationFailure) as exc:
        calibrate_conventions(4, strict=True)
    assert exc.value.report["literal_survivors"] == 0


def test_literal_identity_smallest_knot_counterexample():
    conv = frozen_convention()
    lit = ConventionRecord(conv.i_sign, conv.spinc_sum, conv.chirality, conv.odd_p_endpoint, LITERAL)
    fail = first_failure(lit, 60, pmin=3)
    assert (fail.K.p, fail.K.q) == (3, 1)
    assert theorem_lhs(fail.K) == GaussLaurent({-4: -1, 0: -1, 2: 1})
    assert theorem_lhs(fail.K) != theorem_rhs(fail.K, lit)


def test_corrected_identity_up_to_60():
    conv = frozen_convention()
    assert first_failure(conv, 60) is None


@pytest.mark.parametrize("K", [TwoBridge(1, 0), TwoBridge(2, 1), TwoBridge(3, 1), TwoBridge(5, 2, True)])
def test_corrected_identity_examples(K):
    conv = frozen_convention()
    assert corrected_lhs(K) == corrected_rhs(K, conv)


def test_skeinproof_examples():
    for K in (TwoBridge(1, 0), TwoBridge(3, 1), TwoBridge(4, 1)):
        rep = verify_skeinproof(K)
        assert rep.ok, rep.to_json()
    assert verify_skeinproof(TwoBridge(1, 0)).spin_side == (0,)


def test_mismatch_report_is_raised():
    bad = ConventionRecord("+", "non-spin", "mirrored", "low", CORRECTED)
    with pytest.raises(MismatchReport) as exc:
        verify_skeinproof(TwoBridge(3, 1), bad, strict=True)
    assert Counter(exc.value.report.spin_side) != Counter(exc.value.report.skein_side) \
        or not exc.value.report.spin_matches_c
