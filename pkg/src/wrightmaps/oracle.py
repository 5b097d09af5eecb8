"""Polar-grid geometric verification, independent of the coefficient criteria.

Three pointwise quantities are sampled on circles |z| = r < 1:

* ``dtheta_arg_f``       - d/dtheta arg f(r e^{i theta}), assembled as
  Re[(z H'(z) - conj(z S'(z))) / f(z)] with S = sigma*G; starlikeness of
  order alpha means this stays above alpha.
* ``dtheta_arg_ftheta``  - d/dtheta arg of the tangent f_theta, assembled as
  Im(f_thth / f_th) with f_th = i(z H' - conj(z S')) and
  f_thth = -(z H' + z^2 H'' + conj(z S' + z^2 S'')); convexity of order alpha
  means this stays above alpha.
* ``jacobian_margin``    - |H'(z)| - |S'(z)|; positive means sense-preserving.

Sampling probes the defining inequalities directly, so it can only ever
*refute* a criterion's sufficiency claim, never certify necessity: a failed
coefficient criterion alongside a clean sweep is a legitimate outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError, SingularPointError
from .mappings import EvalPoint, ImageCoefficients

QUANTITIES = ("dtheta_arg_f", "dtheta_arg_ftheta", "jacobian_margin")

# Below this magnitude a denominator counts as a zero: the point is singular.
SINGULAR_EPS = 1e-13


@dataclass(frozen=True)
class SampleGrid:
    """Radii in (0, 1) times equally spaced angles theta_k = 2 pi k / theta_count."""

    radii: tuple = (0.5, 0.9, 0.99)
    theta_count: int = 4096

    def __post_init__(self):
        radii = tuple(sorted(float(r) for r in self.radii))
        if not radii:
            raise DomainError("radii must be non-empty")
        if not all(0 < r < 1 for r in radii):
            raise DomainError(f"every radius must lie in (0, 1), got {radii}")
        object.__setattr__(self, "radii", radii)
        if self.theta_count < 8 or int(self.theta_count) != self.theta_count:
            raise DomainError(f"theta_count must be an integer >= 8, got {self.theta_count}")
        object.__setattr__(self, "theta_count", int(self.theta_count))


@dataclass(frozen=True)
class Violation:
    """One sub-threshold site; kind 'singular' marks a vanishing denominator."""

    point: EvalPoint
    value: float
    kind: str = "value"


@dataclass
class OracleReport:
    """Sweep outcome: global minimum, its location, and all sub-threshold sites."""

    quantity: str
    min_value: float
    argmin: EvalPoint | None
    violations: list = field(default_factory=list)
    threshold: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.violations


def _bundle(img: ImageCoefficients):
    return (
        img.h,
        npoly.polyder(img.h),
        npoly.polyder(img.h, 2),
        img.g,
        npoly.polyder(img.g),
        npoly.polyder(img.g, 2),
    )


def _quantity_values(bundle, z, quantity):
    """Vectorized evaluation; returns (values, singular_mask)."""
    h, hd, hdd, g, gd, gdd = bundle
    hp = npoly.polyval(z, hd)
    sp = npoly.polyval(z, gd)
    if quantity == "jacobian_margin":
        return np.abs(hp) - np.abs(sp), np.zeros(np.shape(z), dtype=bool)
    if quantity == "dtheta_arg_f":
        f = npoly.polyval(z, h) + np.conj(npoly.polyval(z, g))
        singular = np.abs(f) < SINGULAR_EPS
        safe = np.where(singular, 1.0, f)
        return np.real((z * hp - np.conj(z * sp)) / safe), singular
    if quantity == "dtheta_arg_ftheta":
        hpp = npoly.polyval(z, hdd)
        spp = npoly.polyval(z, gdd)
        f_th = 1j * (z * hp - np.conj(z * sp))
        f_thth = -(z * hp + z * z * hpp + np.conj(z * sp + z * z * spp))
        singular = np.abs(f_th) < SINGULAR_EPS
        safe = np.where(singular, 1.0, f_th)
        return np.imag(f_thth / safe), singular
    raise DomainError(f"unknown quantity {quantity!r}; known: {', '.join(QUANTITIES)}")


def _scalar(img, pt, quantity):
    vals, singular = _quantity_values(_bundle(img), np.array([pt.z]), quantity)
    if singular[0]:
        raise SingularPointError(f"{quantity} undefined at r={pt.r}, theta={pt.theta}")
    return float(vals[0])


def dtheta_arg_f(img: ImageCoefficients, pt: EvalPoint) -> float:
    """Rate of advance of arg f along the circle of radius pt.r, at pt.theta."""
    return _scalar(img, pt, "dtheta_arg_f")


def dtheta_arg_ftheta(img: ImageCoefficients, pt: EvalPoint) -> float:
    """Rate of advance of the tangent direction along the circle at pt."""
    return _scalar(img, pt, "dtheta_arg_ftheta")


def jacobian_margin(img: ImageCoefficients, pt: EvalPoint) -> float:
    """|H'(z)| - |(sigma G)'(z)| at pt; positive means locally sense-preserving."""
    return _scalar(img, pt, "jacobian_margin")


def sweep(img: ImageCoefficients, grid: SampleGrid, quantity: str, threshold: float) -> OracleReport:
    """Evaluate `quantity` on the whole grid; record minimum and sub-threshold sites.

    Singular points are recorded as violations of kind 'singular' with value
    -inf (a zero of f off the origin is itself a failure), never raised.
    Violations are ordered radius-major, then by angle.
    """
    bundle = _bundle(img)
    threshold = float(threshold)
    min_value = math.inf
    argmin = None
    violations = []
    for r in grid.radii:
        thetas = 2 * np.pi * np.arange(grid.theta_count) / grid.theta_count
        z = r * np.exp(1j * thetas)
        vals, singular = _quantity_values(bundle, z, quantity)
        vals = np.where(singular, -np.inf, vals)
        i = int(np.argmin(vals))
        if vals[i] < min_value:
            min_value = float(vals[i])
            argmin = EvalPoint(r, float(thetas[i]))
        for j in np.flatnonzero(vals < threshold):
            violations.append(
                Violation(
                    EvalPoint(r, float(thetas[j])),
                    float(vals[j]),
                    "singular" if singular[j] else "value",
                )
            )
    return OracleReport(quantity, min_value, argmin, violations, threshold)
