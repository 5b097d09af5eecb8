"""Evaluate the four-parameter series, its normalized form, and derivative values.

The quadruple (alpha, beta, gamma, delta) = (1, 1, 1, 1) makes every
coefficient 1/(n!)^2, so the value at z = 1 is the modified Bessel value
I0(2) -- a handy cross-check for the truncation machinery.
"""

import numpy as np

from wrightmaps import SeriesControl, WrightParams, derivs_at_one, normalized_eval, wright_eval

p = WrightParams(1, 1, 1, 1)
print(f"base series at z=1:        {wright_eval(p, 1).real:.15f}   (I0(2) = 2.279585302336067)")
print(f"normalized value at z=1:   {normalized_eval(p, 1).real:.15f}")

d = derivs_at_one(p)
print(f"W(1), W'(1), W''(1), W'''(1) = {d.w1:.12f}, {d.wp1:.12f}, {d.wpp1:.12f}, {d.wppp1:.12f}")
print("  (W'(1) = I0(2) + I1(2) = 3.870222156973396)")

# Complex arguments are fine anywhere in the plane; the series is entire.
z = 1.2 + 0.7j
print(f"\nbase series at z={z}: {wright_eval(WrightParams(0.8, 1.6, 2.0, 0.5), z):.12g}")

# Tighter or looser truncation is a SeriesControl away.
loose = SeriesControl(max_terms=2000, tail_tol=1e-6)
tight = SeriesControl(max_terms=2000, tail_tol=1e-15)
v1 = wright_eval(p, 1, loose)
v2 = wright_eval(p, 1, tight)
print(f"\nloose vs tight tail tolerance: {v1.real:.15f} vs {v2.real:.15f}")

# With gamma = delta = 1 the series collapses to the classical two-parameter
# form sum z^n / (Gamma(alpha + n beta) n!).
import math

a, b = 1.3, 0.9
classical = sum((0.5**n) / (math.gamma(a + n * b) * math.factorial(n)) for n in range(40))
print(f"\nclassical reduction at z=0.5: {wright_eval(WrightParams(a, b, 1, 1), 0.5).real:.15f}")
print(f"directly coded series:        {classical:.15f}")
