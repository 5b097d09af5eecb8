"""Geometric sampling oracle: pointwise quantities and grid sweeps."""

import math

import numpy as np
import pytest

from wrightmaps import (
    DomainError,
    EvalPoint,
    ImageCoefficients,
    SampleGrid,
    SingularPointError,
    dtheta_arg_f,
    dtheta_arg_ftheta,
    eval_map,
    identity_image,
    jacobian_margin,
    sweep,
)


def random_safe_image(rng, n=8, budget=0.9):
    """Random image whose weighted coefficient sum stays below the univalence bound."""
    ha = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    gb = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    n_a = np.arange(2, 2 + n)
    n_b = np.arange(1, 1 + n)
    total = np.sum(n_a * np.abs(ha)) + np.sum(n_b * np.abs(gb))
    scale = budget / total
    return ImageCoefficients(ha * scale, gb * scale)


def test_identity_values():
    rng = np.random.default_rng(0)
    for _ in range(5):
        pt = EvalPoint(rng.uniform(0.05, 0.95), rng.uniform(0, 2 * math.pi))
        assert dtheta_arg_f(identity_image(), pt) == pytest.approx(1.0, abs=1e-14)
        assert dtheta_arg_ftheta(identity_image(), pt) == pytest.approx(1.0, abs=1e-14)
        assert jacobian_margin(identity_image(), pt) == pytest.approx(1.0, abs=1e-15)


def test_dtheta_arg_f_reflection_example():
    # f = z + conj(c z): value (1 - c^2)/(1 + c^2) at theta = pi/4, any radius.
    c = 0.5
    img = ImageCoefficients([], [c])
    for r in (0.2, 0.6, 0.95):
        assert dtheta_arg_f(img, EvalPoint(r, math.pi / 4)) == pytest.approx(0.6, abs=1e-13)


def test_jacobian_examples():
    assert jacobian_margin(ImageCoefficients([], [0.5]), EvalPoint(0.3, 1.0)) == pytest.approx(0.5)
    img = ImageCoefficients([0.5], [0.9])
    assert jacobian_margin(img, EvalPoint(0.9, 0.0)) == pytest.approx(1.0, abs=1e-14)


def test_finite_difference_agreement():
    rng = np.random.default_rng(99)
    h = 1e-5
    for _ in range(10):
        img = random_safe_image(rng)
        for _ in range(10):
            r = rng.uniform(0.05, 0.95)
            th = rng.uniform(0, 2 * math.pi)

            f_p = eval_map(img, EvalPoint(r, th + h))
            f_m = eval_map(img, EvalPoint(r, th - h))
            fd = np.angle(f_p / f_m) / (2 * h)
            assert abs(dtheta_arg_f(img, EvalPoint(r, th)) - fd) < 1e-6

            def f_theta(theta):
                z = r * np.exp(1j * theta)
                hp = np.polynomial.polynomial.polyval(z, np.polynomial.polynomial.polyder(img.h))
                sp = np.polynomial.polynomial.polyval(z, np.polynomial.polynomial.polyder(img.g))
                return 1j * (z * hp - np.conj(z * sp))

            fd2 = np.angle(f_theta(th + h) / f_theta(th - h)) / (2 * h)
            assert abs(dtheta_arg_ftheta(img, EvalPoint(r, th)) - fd2) < 1e-5


def test_sample_grid_validation():
    with pytest.raises(DomainError):
        SampleGrid((), 64)
    with pytest.raises(DomainError):
        SampleGrid((0.5, 1.0), 64)
    with pytest.raises(DomainError):
        SampleGrid((0.5,), 4)
    grid = SampleGrid((0.9, 0.5), 64)
    assert grid.radii == (0.5, 0.9)  # stored sorted


def test_sweep_identity_clean():
    rep = sweep(identity_image(), SampleGrid((0.5, 0.9), 256), "dtheta_arg_f", 0.0)
    assert rep.min_value == pytest.approx(1.0, abs=1e-13)
    assert rep.violations == [] and rep.clean
    assert rep.argmin is not None


def test_sweep_equality_case_starlike():
    # Boundary case of the starlike coefficient test: still clean at threshold 0.
    img = ImageCoefficients([0.5], [])
    rep = sweep(img, SampleGrid((0.9, 0.99), 4096), "dtheta_arg_f", 0.0)
    assert rep.min_value >= 0 and rep.clean


def test_sweep_equality_case_convex():
    img = ImageCoefficients([0.25], [])
    rep = sweep(img, SampleGrid((0.99,), 4096), "dtheta_arg_ftheta", 0.0)
    assert rep.min_value >= 0 and rep.clean


def test_sweep_detects_sense_reversal():
    # |(sigma G)'| = 1.8 r exceeds |H'| = 1 once r > 5/9.
    img = ImageCoefficients([], [0, 0.9])
    rep = sweep(img, SampleGrid((0.5, 0.9, 0.99), 512), "jacobian_margin", 0.0)
    assert rep.min_value == pytest.approx(1 - 1.782, abs=1e-12)
    assert rep.argmin.r == 0.99
    assert any(v.point.r == 0.99 and v.point.theta == 0.0 for v in rep.violations)
    assert all(v.value < 0 for v in rep.violations)
    # Ordering is radius-major, then angle.
    keys = [(v.point.r, v.point.theta) for v in rep.violations]
    assert keys == sorted(keys)
    # r = 0.5 stays sense-preserving, so every violation sits on the outer circles.
    assert all(v.point.r > 0.5 for v in rep.violations)


def test_sweep_unknown_quantity():
    with pytest.raises(DomainError):
        sweep(identity_image(), SampleGrid((0.5,), 64), "nope", 0.0)


def test_singular_point_recorded_not_raised():
    # H = z + 2 z^2 vanishes at z = -1/2, which the grid hits exactly.
    img = ImageCoefficients([2.0], [])
    with pytest.raises(SingularPointError):
        dtheta_arg_f(img, EvalPoint(0.5, math.pi))
    rep = sweep(img, SampleGrid((0.5,), 8), "dtheta_arg_f", 0.0)
    singular = [v for v in rep.violations if v.kind == "singular"]
    assert len(singular) == 1 and singular[0].point.theta == pytest.approx(math.pi)
    assert rep.min_value == -math.inf and rep.argmin.theta == pytest.approx(math.pi)


def test_rotation_covariance():
    # Rigid disk rotation: A_n -> A_n e^{i(n-1)phi}, B_n -> B_n e^{i(n+1)phi};
    # sweep values are relabeled angles, so their sorted samples coincide.
    rng = np.random.default_rng(31)
    img = random_safe_image(rng, n=6)
    count = 128
    grid = SampleGrid((0.4, 0.8), count)
    k = 37
    phi = 2 * math.pi * k / count
    n_a = np.arange(2, 2 + img.ha.size)
    n_b = np.arange(1, 1 + img.gb.size)
    rotated = ImageCoefficients(
        img.ha * np.exp(1j * (n_a - 1) * phi), img.gb * np.exp(1j * (n_b + 1) * phi)
    )
    for quantity in ("dtheta_arg_f", "dtheta_arg_ftheta", "jacobian_margin"):
        # threshold +inf records every sample as a "violation": a value harvest.
        base = sweep(img, grid, quantity, np.inf)
        rot = sweep(rotated, grid, quantity, np.inf)
        base_vals = np.sort([v.value for v in base.violations])
        rot_vals = np.sort([v.value for v in rot.violations])
        assert np.allclose(base_vals, rot_vals, rtol=0, atol=1e-10)
        assert rot.min_value == pytest.approx(base.min_value, abs=1e-10)
