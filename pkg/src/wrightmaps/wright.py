"""Four-parameter Wright series: plain and normalized evaluation, derivatives at 1.

The base series is

    sum_{n>=0} z^n / (Gamma(alpha + n*beta) * Gamma(gamma + n*delta)),

entire in z whenever beta + delta > 0.  Its normalized companion

    W(z) = z * Gamma(alpha) * Gamma(gamma) * (base series)
         = sum_{n>=1} c_n z^n,   c_n = Gamma(alpha)Gamma(gamma) /
                                       (Gamma(alpha+(n-1)beta) Gamma(gamma+(n-1)delta))

has W(0) = 0 and W'(0) = 1 (c_1 = 1).  All gamma ratios are computed as
differences of log-gamma values so that no intermediate overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln

from .errors import ConvergenceError, DomainError

# Geometric tail-safety factor: summation stops only once consecutive term
# magnitudes have ratio <= 1/2, so the remaining tail is at most one current
# term; the factor 2 turns "term <= tol/2" into "tail < tol".  Log-gamma is
# convex, hence the term ratio is strictly decreasing in n and the observed
# ratio bound stays valid for the whole tail.
_TAIL_SAFETY = 2.0


@dataclass(frozen=True)
class WrightParams:
    """Parameter quadruple (alpha, beta, gamma, delta) of one series.

    Requires alpha > 0, gamma > 0, beta >= 0, delta >= 0 and beta + delta > 0
    (the last is what makes the series converge absolutely for every z).
    """

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        vals = (self.alpha, self.beta, self.gamma, self.delta)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError(f"parameters must be finite, got {vals}")
        if self.alpha <= 0 or self.gamma <= 0:
            raise DomainError(f"alpha and gamma must be > 0, got alpha={self.alpha}, gamma={self.gamma}")
        if self.beta < 0 or self.delta < 0:
            raise DomainError(f"beta and delta must be >= 0, got beta={self.beta}, delta={self.delta}")
        if self.beta + self.delta <= 0:
            raise DomainError("beta + delta must be > 0 for an absolutely convergent series")


@dataclass(frozen=True)
class SeriesControl:
    """Truncation control: hard term budget and absolute tail tolerance."""

    max_terms: int = 2000
    tail_tol: float = 1e-14

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 2:
            raise DomainError(f"max_terms must be an integer >= 2, got {self.max_terms}")
        object.__setattr__(self, "max_terms", int(self.max_terms))
        if not (self.tail_tol > 0):
            raise DomainError(f"tail_tol must be > 0, got {self.tail_tol}")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class DerivativeValues:
    """Values W(1), W'(1), W''(1), W'''(1) of the normalized series.

    Every term of every sum is positive, so all four fields are >= 0, and
    w1 >= 1, wp1 >= 1 because the leading term z contributes 1 to each.
    """

    w1: float
    wp1: float
    wpp1: float
    wppp1: float


def norm_coeff(p: WrightParams, n: int) -> float:
    """Coefficient c_n of the normalized series, n >= 1.

    Computed as exp of a log-gamma difference; always > 0, and c_1 == 1.
    """
    if n < 1 or int(n) != n:
        raise DomainError(f"coefficient index must be an integer >= 1, got {n}")
    return float(
        math.exp(
            gammaln(p.alpha)
            + gammaln(p.gamma)
            - gammaln(p.alpha + (n - 1) * p.beta)
            - gammaln(p.gamma + (n - 1) * p.delta)
        )
    )


def wright_eval(p: WrightParams, z: complex, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Partial sum of the base series with certified tail below ctrl.tail_tol."""
    z = complex(z)
    if z == 0:
        return complex(math.exp(-gammaln(p.alpha) - gammaln(p.gamma)))
    log_r = math.log(abs(z))
    phase = z / abs(z)
    total = 0j
    term_phase = 1 + 0j
    prev_mag = math.inf
    for n in range(ctrl.max_terms):
        mag = math.exp(
            n * log_r - gammaln(p.alpha + n * p.beta) - gammaln(p.gamma + n * p.delta)
        )
        total += mag * term_phase
        if n >= 1 and mag <= 0.5 * prev_mag and _TAIL_SAFETY * mag <= ctrl.tail_tol:
            return total
        prev_mag = mag
        term_phase *= phase
    raise ConvergenceError(
        f"series tail not below {ctrl.tail_tol} within {ctrl.max_terms} terms for {p}, z={z}"
    )


def normalized_eval(p: WrightParams, z: complex, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Normalized series sum_{n>=1} c_n z^n; equals z*Gamma(alpha)*Gamma(gamma)*wright_eval."""
    z = complex(z)
    if z == 0:
        return 0j
    la = gammaln(p.alpha)
    lg = gammaln(p.gamma)
    log_r = math.log(abs(z))
    phase = z / abs(z)
    total = 0j
    term_phase = phase
    prev_mag = math.inf
    for n in range(1, ctrl.max_terms + 1):
        mag = math.exp(
            la
            + lg
            + n * log_r
            - gammaln(p.alpha + (n - 1) * p.beta)
            - gammaln(p.gamma + (n - 1) * p.delta)
        )
        total += mag * term_phase
        if n >= 2 and mag <= 0.5 * prev_mag and _TAIL_SAFETY * mag <= ctrl.tail_tol:
            return total
        prev_mag = mag
        term_phase *= phase
    raise ConvergenceError(
        f"normalized series tail not below {ctrl.tail_tol} within {ctrl.max_terms} terms for {p}"
    )


def derivs_at_one(p: WrightParams, ctrl: SeriesControl = DEFAULT_CONTROL) -> DerivativeValues:
    """W(1), W'(1), W''(1), W'''(1) as truncated positive-term sums.

    One pass accumulates sum c_n, sum n c_n, sum n(n-1) c_n, sum n(n-1)(n-2) c_n.
    The stop rule bounds the heaviest tail: the current term is weighted by n^3
    (which dominates all four weights) before comparison against tail_tol.
    """
    la = gammaln(p.alpha)
    lg = gammaln(p.gamma)
    w1 = wp1 = wpp1 = wppp1 = 0.0
    prev_weighted = math.inf
    for n in range(1, ctrl.max_terms + 1):
        c = math.exp(
            la
            + lg
            - gammaln(p.alpha + (n - 1) * p.beta)
            - gammaln(p.gamma + (n - 1) * p.delta)
        )
        w1 += c
        wp1 += n * c
        wpp1 += n * (n - 1) * c
        wppp1 += n * (n - 1) * (n - 2) * c
        weighted = n**3 * c
        if n >= 2 and weighted <= 0.5 * prev_weighted and _TAIL_SAFETY * weighted <= ctrl.tail_tol:
            return DerivativeValues(w1, wp1, wpp1, wppp1)
        prev_weighted = weighted
    raise ConvergenceError(
        f"derivative sums not below tolerance {ctrl.tail_tol} within {ctrl.max_terms} terms for {p}"
    )
