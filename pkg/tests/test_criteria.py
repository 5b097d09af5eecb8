"""Coefficient criteria, class bounds, and the theorem checkers."""

import numpy as np
import pytest

from wrightmaps import (
    ConvolutionSpec,
    CoefficientSeq,
    DomainError,
    FORM_DERIVED,
    FORM_EXACT,
    FORM_STATED,
    ImageCoefficients,
    THEOREM_IDS,
    WrightParams,
    class_bound_coeffs,
    close_to_convex_probe,
    convolve,
    default_epsilons,
    exact_image_criterion,
    lemma1_sum,
    lemma2_sum,
    lemma5_sum,
    lemma6_membership,
    stated_hypothesis,
)

P1111 = WrightParams(1, 1, 1, 1)
P2121 = WrightParams(2, 1, 2, 1)
I1_AT_2_MINUS = 0.5906368546373291  # sum_{n>=2} n/(n!)^2, frozen from the 50-digit oracle


def spec_of(p1, p2=None, sigma=0.0):
    return ConvolutionSpec(p1, p2 if p2 is not None else p1, sigma)


def test_lemma1_examples():
    rep = lemma1_sum([], [], 0.3)
    assert rep.satisfied and rep.lhs == 0 and rep.rhs == pytest.approx(0.7)
    rep = lemma1_sum([0.5], [], 0.0)  # A_2 = (1-a)/(2-a) at a = 0
    assert rep.satisfied and rep.margin == pytest.approx(0.0, abs=1e-15)
    rep = lemma1_sum([], [0.5], 0.5)
    assert not rep.satisfied and rep.lhs == pytest.approx(0.75) and rep.rhs == pytest.approx(0.5)
    assert rep.form == FORM_EXACT


def test_lemma2_examples():
    assert lemma2_sum([], [], 0.0).satisfied
    rep = lemma2_sum([0.25], [], 0.0)
    assert rep.satisfied and rep.margin == pytest.approx(0.0, abs=1e-15)
    rep = lemma2_sum([], [0.6], 0.5)
    assert not rep.satisfied and rep.lhs == pytest.approx(0.9)


def test_lemma5_examples():
    assert lemma5_sum([]).satisfied
    rep = lemma5_sum([0.5])
    assert rep.satisfied and rep.lhs == pytest.approx(1.0) and rep.margin == pytest.approx(0.0)
    rep = lemma5_sum([0.4, 0.1])
    assert not rep.satisfied and rep.lhs == pytest.approx(1.1)


def test_order_validation():
    with pytest.raises(DomainError):
        lemma1_sum([], [], 1.0)
    with pytest.raises(DomainError):
        lemma2_sum([], [], -0.2)


def test_lemma6_delegates_both_ways():
    rng = np.random.default_rng(2)
    a_abs, b_abs = rng.uniform(0, 0.2, 5), rng.uniform(0, 0.2, 4)
    for order in (0.0, 0.4):
        srh = lemma6_membership(a_abs, b_abs, order, "SRH")
        ref = lemma1_sum(a_abs, b_abs, order)
        assert (srh.lhs, srh.rhs, srh.satisfied) == (ref.lhs, ref.rhs, ref.satisfied)
        assert srh.id == "L6:SRH"
        krh = lemma6_membership(a_abs, b_abs, order, "KRH")
        ref = lemma2_sum(a_abs, b_abs, order)
        assert (krh.lhs, krh.rhs, krh.satisfied) == (ref.lhs, ref.rhs, ref.satisfied)
    with pytest.raises(DomainError):
        lemma6_membership(a_abs, b_abs, 0.0, "XYZ")


def test_class_bound_examples():
    a_abs, b_abs = class_bound_coeffs("KH0", 0.0, 3)
    assert a_abs[-1] == pytest.approx(2.0) and b_abs[-1] == pytest.approx(1.0)
    a_abs, b_abs = class_bound_coeffs("CH0_family", 0.0, 2)
    assert a_abs[0] == pytest.approx(2.5) and b_abs[-1] == pytest.approx(0.5)
    assert b_abs[0] == 0.0  # B_1 vanishes for the zero-slope family
    a0, b0 = class_bound_coeffs("CH", 0.0, 6)
    a1, b1 = class_bound_coeffs("CH0_family", 0.0, 6)
    assert np.allclose(a0, a1) and np.allclose(b0, b1)
    a2, b2 = class_bound_coeffs("CH", 0.5, 3)
    assert b2[0] == pytest.approx(0.5)  # first co-analytic bound picks up |b1|
    with pytest.raises(DomainError):
        class_bound_coeffs("CH", 1.0, 5)
    with pytest.raises(DomainError):
        class_bound_coeffs("KH0", 0.0, 1)
    with pytest.raises(DomainError):
        class_bound_coeffs("nope", 0.0, 5)


def test_hypothesis_t31_negligible_tail():
    stated, derived = stated_hypothesis("T3.1", spec_of(WrightParams(1, 50, 1, 1)), 0.0)
    assert stated.lhs == pytest.approx(0.0, abs=1e-50)
    assert stated.satisfied and derived.satisfied


def test_hypothesis_t31_value():
    stated, derived = stated_hypothesis("T3.1", spec_of(P2121), 0.0)
    assert stated.lhs == pytest.approx(I1_AT_2_MINUS, abs=1e-10)
    assert stated.lhs == derived.lhs and stated.rhs == derived.rhs == 1.0
    assert stated.form == FORM_STATED and derived.form == FORM_DERIVED


def test_hypothesis_t32_fails_at_base_point():
    stated, derived = stated_hypothesis("T3.2", spec_of(P1111), 0.0)
    assert stated.lhs == pytest.approx(2.2795853023360673, abs=1e-10)
    assert stated.rhs == 2.0 and not stated.satisfied
    assert derived.rhs == 1.0 and not derived.satisfied


def test_hypothesis_t41_two_forms():
    stated, derived = stated_hypothesis("T4.1", spec_of(WrightParams(1, 3, 1, 3)), 0.0)
    # Quoted form keeps the full first derivative and compares against the order.
    assert stated.rhs == 0.0 and derived.rhs == 1.0
    assert stated.lhs - derived.lhs == pytest.approx(1.0, rel=1e-12)
    assert derived.satisfied and not stated.satisfied


def test_hypothesis_b1_only_used_by_t51_t54():
    spec = spec_of(WrightParams(1, 4, 1, 4))
    for tid in ("T3.1", "T4.1", "T5.2", "T5.3"):
        r0 = stated_hypothesis(tid, spec, 0.0, b1=0.0)
        r1 = stated_hypothesis(tid, spec, 0.0, b1=0.7)
        assert (r0[0].lhs, r0[1].lhs) == (r1[0].lhs, r1[1].lhs)
    for tid in ("T5.1", "T5.4"):
        r0 = stated_hypothesis(tid, spec, 0.0, b1=0.0)
        r1 = stated_hypothesis(tid, spec, 0.0, b1=0.7)
        assert r0[0].rhs != r1[0].rhs or r0[1].lhs != r1[1].lhs
        with pytest.raises(DomainError):
            stated_hypothesis(tid, spec, 0.0, b1=1.0)


def test_hypothesis_t5_ignores_sigma():
    p = WrightParams(1, 3, 2, 2)
    for tid in ("T5.1", "T5.2", "T5.3", "T5.4"):
        a = stated_hypothesis(tid, spec_of(p, p, 0.0), 0.0, b1=0.2)
        b = stated_hypothesis(tid, spec_of(p, p, 0.9), 0.0, b1=0.2)
        assert a[0].lhs == b[0].lhs and a[1].lhs == b[1].lhs


def test_monotone_in_sigma():
    p1 = WrightParams(1.3, 1.8, 0.9, 1.1)
    p2 = WrightParams(2.0, 1.2, 1.5, 0.7)
    for tid in THEOREM_IDS:
        prev_stated = prev_derived = -np.inf
        for s in (0.0, 0.3, 0.6, 0.9):
            stated, derived = stated_hypothesis(tid, spec_of(p1, p2, s), 0.2, b1=0.1)
            assert stated.lhs >= prev_stated - 1e-12
            assert derived.lhs >= prev_derived - 1e-12
            prev_stated, prev_derived = stated.lhs, derived.lhs


def test_specialization_consistency():
    p1 = WrightParams(1.4, 2.2, 1.0, 1.0)
    p2 = WrightParams(0.8, 1.6, 1.0, 1.0)
    spec = spec_of(p1, p2, 0.35)
    for full, reduced in (("T3.1", "C1"), ("T4.1", "R1")):
        a = stated_hypothesis(full, spec, 0.15)
        b = stated_hypothesis(reduced, spec, 0.15)
        assert a[0].lhs == b[0].lhs and a[0].rhs == b[0].rhs
        assert a[1].lhs == b[1].lhs and a[1].rhs == b[1].rhs
    # The reduction forces gamma = delta = 1 even when the caller does not.
    base = stated_hypothesis("T3.1", spec, 0.15)
    spec2 = spec_of(WrightParams(1.4, 2.2, 3.0, 0.5), p2, 0.35)
    forced = stated_hypothesis("C1", spec2, 0.15)
    assert forced[0].lhs == base[0].lhs


def test_unknown_theorem_id():
    with pytest.raises(DomainError):
        stated_hypothesis("T9.9", spec_of(P1111), 0.0)


def test_exact_image_criterion_examples():
    rep = exact_image_criterion(ImageCoefficients(), 0.3, "starlike_L1")
    assert rep.satisfied and rep.margin == pytest.approx(0.7)
    img = convolve(CoefficientSeq(np.ones(49), []), spec_of(P2121))
    rep = exact_image_criterion(img, 0.0, "starlike_L1")
    assert rep.satisfied and rep.lhs <= I1_AT_2_MINUS
    rep = exact_image_criterion(ImageCoefficients([], [0.9]), 0.2, "convex_L2")
    assert not rep.satisfied and rep.lhs == pytest.approx(1.2 * 0.9)
    with pytest.raises(DomainError):
        exact_image_criterion(img, 0.0, "bogus")


def test_default_epsilons():
    eps = default_epsilons()
    assert eps.size == 68
    assert np.allclose(np.abs(eps), 1.0, atol=1e-15)


def test_close_to_convex_probe_examples():
    reports = close_to_convex_probe(ImageCoefficients())
    assert len(reports) == 68 and all(r.satisfied for r in reports)
    reports = close_to_convex_probe(ImageCoefficients([0.5], []))
    assert all(r.satisfied for r in reports)
    assert min(r.margin for r in reports) == pytest.approx(0.0, abs=1e-12)
    reports = close_to_convex_probe(ImageCoefficients([0.4], [0, 0.2]), epsilons=[-1, 1])
    assert reports[0].lhs == pytest.approx(0.4) and reports[0].satisfied
    assert reports[1].lhs == pytest.approx(1.2) and not reports[1].satisfied


def test_close_to_convex_probe_denominator_and_validation():
    img = ImageCoefficients([0.1], [0.5, 0.05])
    reports = close_to_convex_probe(img)  # b1 defaults to the image's own gb[1]
    assert len(reports) == 68
    with pytest.raises(DomainError):
        close_to_convex_probe(img, b1=1.0)
    with pytest.raises(DomainError):
        close_to_convex_probe(img, epsilons=[0.5])
