"""Cross-check a coefficient criterion against the sampled geometric truth.

The oracle samples d/dtheta arg f on circles: staying above the order alpha
is the literal definition of starlikeness of order alpha.  A criterion pass
must therefore always come with a clean sweep (sufficiency); a criterion fail
with a clean sweep is legitimate, because the criteria are not necessary.
"""

import numpy as np

from wrightmaps import (
    ConvolutionSpec,
    ImageCoefficients,
    SampleGrid,
    WrightParams,
    convolve,
    exact_image_criterion,
    random_coefficients,
    stated_hypothesis,
    sweep,
)

rng = np.random.default_rng(4)
spec = ConvolutionSpec(WrightParams(2, 1, 2, 1), WrightParams(2, 1, 2, 1), 0.3)
order = 0.0
grid = SampleGrid(radii=(0.5, 0.9, 0.99), theta_count=4096)

f = random_coefficients(rng, 50)
img = convolve(f, spec)

_, derived = stated_hypothesis("T3.1", spec, order)
exact = exact_image_criterion(img, order, "starlike_L1")
rep = sweep(img, grid, "dtheta_arg_f", order)

print(f"hypothesis (derived form): lhs={derived.lhs:.6f} <= {derived.rhs}?  {derived.satisfied}")
print(f"exact image criterion:     lhs={exact.lhs:.6f} <= {exact.rhs}?  {exact.satisfied}")
print(f"oracle sweep:              min d/dtheta arg f = {rep.min_value:.6f} "
      f"at r={rep.argmin.r}, theta={rep.argmin.theta:.4f}")
print(f"violations below order:    {len(rep.violations)}")

# Sense-preservation has its own pointwise margin.  This image reverses
# orientation near the boundary: |(sigma G)'| = 1.8 r beats |H'| = 1.
bad = ImageCoefficients([], [0, 0.9])
rep = sweep(bad, grid, "jacobian_margin", 0.0)
v = rep.violations[0]
print(f"\nconstructed counterexample: min |H'|-|S'| = {rep.min_value:.4f}, first violation "
      f"at r={v.point.r}, theta={v.point.theta:.4f} ({len(rep.violations)} sites)")
