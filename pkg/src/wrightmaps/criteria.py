"""Coefficient sufficiency criteria and the per-theorem hypothesis checkers.

Two layers live here.  The lemma layer evaluates exact finite coefficient
sums: the (n -+ alpha)-weighted starlikeness test, its n(n -+ alpha) convexity
analog, the sum n|t_n| <= 1 starlike-range test, and the extremal coefficient
growth bounds of the classical mapping classes.  The theorem layer evaluates,
for each identifier T3.1..T5.4 (plus the gamma = delta = 1 specializations C1
and R1), a sufficient condition on the derivative values W(1)..W'''(1) of the
two kernel series.  Every checker reports two forms:

* ``as_stated``  - the inequality transcribed exactly as conventionally quoted,
* ``as_derived`` - the sharp bound reassembled from the weighted coefficient
  series that the condition actually controls, compared against what the
  underlying lemma requires.

For several identifiers the two forms disagree (weights dropped, an offset of
1 lost, a wrong subscript, or a wrong right-hand side); both are reported so
the discrepancies can be probed rather than silently inherited.  Acceptance
checks gate on ``as_derived``, whose passing provably implies the exact image
criterion for the matching coefficient class.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .mappings import ConvolutionSpec, ImageCoefficients
from .wright import DEFAULT_CONTROL, SeriesControl, WrightParams, derivs_at_one

FORM_STATED = "as_stated"
FORM_DERIVED = "as_derived"
FORM_EXACT = "exact"

THEOREM_IDS = (
    "T3.1",
    "T3.2",
    "T3.3",
    "T4.1",
    "T4.2",
    "T4.3",
    "T5.1",
    "T5.2",
    "T5.3",
    "T5.4",
    "C1",
    "R1",
)

# Identifiers consuming |B_1|; everyone else ignores the b1 argument.
_B1_THEOREMS = ("T5.1", "T5.4")
# gamma_i = delta_i = 1 forced before evaluation.
_REDUCED = {"C1": "T3.1", "R1": "T4.1"}


@dataclass(frozen=True)
class CriterionReport:
    """One checked inequality lhs <= rhs with its slack margin = rhs - lhs."""

    id: str
    lhs: float
    rhs: float
    satisfied: bool
    margin: float
    form: str


def _report(rid: str, lhs: float, rhs: float, form: str) -> CriterionReport:
    lhs = float(lhs)
    rhs = float(rhs)
    # Strict comparison on computed doubles; callers apply their own slack.
    return CriterionReport(rid, lhs, rhs, lhs <= rhs, rhs - lhs, form)


def _check_order(order: float) -> float:
    order = float(order)
    if not (0 <= order < 1):
        raise DomainError(f"order must lie in [0, 1), got {order}")
    return order


def lemma1_sum(a_abs, b_abs, order: float) -> CriterionReport:
    """sum (n - order)|A_n| + sum (n + order)|B_n|  vs  1 - order."""
    order = _check_order(order)
    a_abs = np.atleast_1d(np.asarray(a_abs, dtype=float))
    b_abs = np.atleast_1d(np.asarray(b_abs, dtype=float))
    n_a = np.arange(2, 2 + a_abs.size)
    n_b = np.arange(1, 1 + b_abs.size)
    lhs = np.sum((n_a - order) * a_abs) + np.sum((n_b + order) * b_abs)
    return _report("L1", lhs, 1.0 - order, FORM_EXACT)


def lemma2_sum(a_abs, b_abs, order: float) -> CriterionReport:
    """sum n(n - order)|A_n| + sum n(n + order)|B_n|  vs  1 - order."""
    order = _check_order(order)
    a_abs = np.atleast_1d(np.asarray(a_abs, dtype=float))
    b_abs = np.atleast_1d(np.asarray(b_abs, dtype=float))
    n_a = np.arange(2, 2 + a_abs.size)
    n_b = np.arange(1, 1 + b_abs.size)
    lhs = np.sum(n_a * (n_a - order) * a_abs) + np.sum(n_b * (n_b + order) * b_abs)
    return _report("L2", lhs, 1.0 - order, FORM_EXACT)


def lemma5_sum(t_abs) -> CriterionReport:
    """sum_{n>=2} n |t_n|  vs  1 (starlike range of z + sum t_n z^n)."""
    t_abs = np.atleast_1d(np.asarray(t_abs, dtype=float))
    n_t = np.arange(2, 2 + t_abs.size)
    return _report("L5", np.sum(n_t * t_abs), 1.0, FORM_EXACT)


def lemma6_membership(a_abs, b_abs, order: float, klass: str) -> CriterionReport:
    """Membership test for the fixed-sign classes; the sum criterion is iff here.

    klass 'SRH' uses the lemma1 weights, 'KRH' the lemma2 weights.
    """
    if klass == "SRH":
        rep = lemma1_sum(a_abs, b_abs, order)
    elif klass == "KRH":
        rep = lemma2_sum(a_abs, b_abs, order)
    else:
        raise DomainError(f"class must be 'SRH' or 'KRH', got {klass!r}")
    return dataclasses.replace(rep, id=f"L6:{klass}")


def class_bound_coeffs(klass: str, b1: float = 0.0, n_max: int = 50):
    """Extremal coefficient-bound sequences (|A_n| for n=2..n_max, |B_n| for n=1..n_max).

    klass 'KH0':        (n+1)/2            and (n-1)/2
    klass 'CH0_family': (2n+1)(n+1)/6      and (2n-1)(n-1)/6
    klass 'CH':         the CH0_family pair cross-mixed with weight |b1|
    """
    if n_max < 2 or int(n_max) != n_max:
        raise DomainError(f"n_max must be an integer >= 2, got {n_max}")
    b1 = abs(b1)
    if b1 >= 1:
        raise DomainError(f"|b1| must be < 1, got {b1}")
    n_a = np.arange(2, n_max + 1, dtype=float)
    n_b = np.arange(1, n_max + 1, dtype=float)
    if klass == "KH0":
        return (n_a + 1) / 2, (n_b - 1) / 2
    grow_a = (2 * n_a + 1) * (n_a + 1) / 6
    fall_a = (2 * n_a - 1) * (n_a - 1) / 6
    grow_b = (2 * n_b + 1) * (n_b + 1) / 6
    fall_b = (2 * n_b - 1) * (n_b - 1) / 6
    if klass == "CH0_family":
        return grow_a, fall_b
    if klass == "CH":
        return grow_a + fall_a * b1, fall_b + grow_b * b1
    raise DomainError(f"class must be 'KH0', 'CH0_family' or 'CH', got {klass!r}")


def _formulas(tid, d1, d2, s, a, b):
    """(stated_lhs, stated_rhs, derived_lhs, derived_rhs) for one identifier."""
    w1, wp1, wpp1, wppp1 = d1.w1, d1.wp1, d1.wpp1, d1.wppp1
    w2, wp2, wpp2, wppp2 = d2.w1, d2.wp1, d2.wpp1, d2.wppp1
    if tid == "T3.1":
        lhs = (wp1 - 1) - a * (w1 - 1) + s * (wp2 + a * w2)
        return lhs, 1 - a, lhs, 1 - a
    if tid == "T3.2":
        # Quoted form compares against 2; the chain bounds the weighted sum by
        # (W1(1) - 1) + s*W2(1), which the membership lemma caps at 1 - a.
        return w1 + s * w2, 2.0, (w1 - 1) + s * w2, 1 - a
    if tid == "T3.3":
        # Quoted form repeats (W1'(1)-1) where the index shift yields (W1(1)-1)
        # and leaves the co-analytic order term outside the s weight.
        stated = wpp1 + (2 - a) * (wp1 - 1) - a * (wp1 - 1) + s * wpp2 + a * (wp2 - w2)
        derived = 0.5 * (wpp1 + (2 - a) * (wp1 - 1) - a * (w1 - 1) + s * (wpp2 + a * (wp2 - w2)))
        return stated, 2 * (1 - a), derived, 1 - a
    if tid == "T4.1":
        # Quoted form has rhs = a and drops the -1 offset of W1'(1).
        stated = wpp1 + (1 - a) * wp1 + s * (wpp2 + (1 + a) * wp2)
        derived = wpp1 + (1 - a) * (wp1 - 1) + s * (wpp2 + (1 + a) * wp2)
        return stated, a, derived, 1 - a
    if tid == "T4.2":
        lhs = wppp1 + (4 - a) * wpp1 + 2 * (1 - a) * (wp1 - 1) + s * (wppp2 + (2 + a) * wpp2)
        return lhs, 2 * (1 - a), 0.5 * lhs, 1 - a
    if tid == "T4.3":
        return w1 + s * w2, 2.0 - a, (w1 - 1) + s * w2, 1 - a
    if tid == "T5.1":
        return w1 + w2 - 2, 1 - b, (w1 + w2 - 2) / (1 - b), 1.0
    if tid == "T5.2":
        return wpp1 + 2 * wp1 + wpp2, 4.0, 0.5 * (wpp1 + 2 * (wp1 - 1) + wpp2), 1.0
    if tid == "T5.3":
        # Quoted form carries a subscript-2 first derivative and weight 1 on
        # the second kernel's third derivative; the chain uses subscript 1 and 2.
        stated = 2 * wppp1 + 9 * wpp1 + 6 * (wp2 - 1) + wppp2 + 3 * wpp2
        derived = (2 * wppp1 + 9 * wpp1 + 6 * (wp1 - 1) + 2 * wppp2 + 3 * wpp2) / 6
        return stated, 6.0, derived, 1.0
    if tid == "T5.4":
        cross1 = 2 * wppp1 + 3 * wpp1
        full2 = 2 * wppp2 + 9 * wpp2 + 6 * (wp2 - 1)
        stated = (
            2 * wppp1 + 9 * wpp1 + 6 * (wp2 - 1) + b * cross1 + 2 * wppp2 + 3 * wpp2 + b * full2
        )
        derived = (
            2 * wppp1 + 9 * wpp1 + 6 * (wp1 - 1) + b * cross1 + 2 * wppp2 + 3 * wpp2 + b * full2
        ) / (6 * (1 - b))
        return stated, 6 * (1 - b), derived, 1.0
    raise DomainError(f"unknown theorem id {tid!r}")


def stated_hypothesis(
    theorem_id: str,
    spec: ConvolutionSpec,
    order: float = 0.0,
    b1: float = 0.0,
    ctrl: SeriesControl = DEFAULT_CONTROL,
):
    """Evaluate one identifier's condition; returns (as_stated, as_derived) reports."""
    if theorem_id not in THEOREM_IDS:
        raise DomainError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    order = _check_order(order)
    b = abs(b1)
    if theorem_id in _B1_THEOREMS and b >= 1:
        raise DomainError(f"|B_1| must be < 1 for {theorem_id}, got {b}")
    p1, p2 = spec.p1, spec.p2
    tid = theorem_id
    if theorem_id in _REDUCED:
        p1 = WrightParams(p1.alpha, p1.beta, 1.0, 1.0)
        p2 = WrightParams(p2.alpha, p2.beta, 1.0, 1.0)
        tid = _REDUCED[theorem_id]
    d1 = derivs_at_one(p1, ctrl)
    d2 = derivs_at_one(p2, ctrl)
    sl, sr, dl, dr = _formulas(tid, d1, d2, abs(spec.sigma), order, b)
    return (
        _report(theorem_id, sl, sr, FORM_STATED),
        _report(theorem_id, dl, dr, FORM_DERIVED),
    )


def exact_image_criterion(img: ImageCoefficients, order: float, target: str) -> CriterionReport:
    """Ground-truth sufficiency check on the image's own coefficients."""
    if target == "starlike_L1":
        rep = lemma1_sum(np.abs(img.ha), np.abs(img.gb), order)
    elif target == "convex_L2":
        rep = lemma2_sum(np.abs(img.ha), np.abs(img.gb), order)
    else:
        raise DomainError(f"target must be 'starlike_L1' or 'convex_L2', got {target!r}")
    return dataclasses.replace(rep, id=target)


def default_epsilons() -> np.ndarray:
    """64 equally spaced unit-modulus probes plus +-1 and +-i (68 values)."""
    return np.concatenate(
        [np.exp(2j * np.pi * np.arange(64) / 64), np.array([1, -1, 1j, -1j], dtype=complex)]
    )


def close_to_convex_probe(img: ImageCoefficients, b1=None, epsilons=None):
    """Starlike-range test of (H + eps*sigma*G)/(1 + eps*b1) per unit-modulus eps.

    b1 defaults to the image's own first co-analytic coefficient; one report
    per epsilon, in input order.  The probe certifies close-to-convexity only
    if every report passes.
    """
    if b1 is None:
        b1 = img.g[1] if img.g.size > 1 else 0j
    b1 = complex(b1)
    if abs(b1) >= 1:
        raise DomainError(f"|b1| must be < 1, got {abs(b1)}")
    if epsilons is None:
        epsilons = default_epsilons()
    epsilons = np.atleast_1d(np.asarray(epsilons, dtype=complex))
    size = max(img.h.size, img.g.size)
    h = np.zeros(size, dtype=complex)
    h[: img.h.size] = img.h
    g = np.zeros(size, dtype=complex)
    g[: img.g.size] = img.g
    reports = []
    for k, eps in enumerate(epsilons):
        if abs(abs(eps) - 1) > 1e-12:
            raise DomainError(f"|epsilon| must equal 1, got {eps}")
        denom = 1 + eps * b1
        assert abs(denom) >= 1e-12  # impossible while |b1| < 1
        t_abs = np.abs((h[2:] + eps * g[2:]) / denom)
        reports.append(dataclasses.replace(lemma5_sum(t_abs), id=f"L5[eps{k}]"))
    return reports
