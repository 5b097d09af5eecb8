"""Build a harmonic mapping from coefficients and push it through the operator.

The operator multiplies each analytic coefficient A_n by the normalized-series
coefficient c_n of the first kernel, and each co-analytic coefficient B_n by
sigma times c_n of the second kernel.  Because c_n decays like an inverse
gamma function, the image is a strongly smoothed copy of the input mapping.
"""

import numpy as np

from wrightmaps import (
    CoefficientSeq,
    ConvolutionSpec,
    EvalPoint,
    WrightParams,
    convolve,
    eval_derivs,
    eval_map,
    norm_coeff,
)

f = CoefficientSeq(a=[0.9, -0.4 + 0.3j, 0.2j], b=[0.5, 0.1, -0.05])
spec = ConvolutionSpec(p1=WrightParams(2, 1, 2, 1), p2=WrightParams(1, 2, 1, 1), sigma=0.6)

print("kernel coefficients c_n (first kernel):",
      [round(norm_coeff(spec.p1, n), 6) for n in range(1, 6)])

img = convolve(f, spec)
print("\ninput  A_2..A_4:", np.round(f.a, 6))
print("image  ha_2..ha_4:", np.round(img.ha, 6))
print("input  B_1..B_3:", np.round(f.b, 6))
print("image  gb_1..gb_3:", np.round(img.gb, 6), "   (sigma already folded in)")

pt = EvalPoint(r=0.8, theta=np.pi / 3)
print(f"\nvalue of the image mapping at r=0.8, theta=pi/3: {eval_map(img, pt):.6f}")
hp, hpp, gp, gpp = eval_derivs(img, pt)
print(f"H'={hp:.6f}  H''={hpp:.6f}  (sigma G)'={gp:.6f}  (sigma G)''={gpp:.6f}")
print(f"sense-preserving here? |H'| - |(sigma G)'| = {abs(hp) - abs(gp):.6f} (positive = yes)")
