"""Render images of concentric circles under a mapping as an SVG drawing.

The identity map yields perfect circles; a convolved random mapping shows how
the operator's coefficient decay keeps boundary curves nearly round even when
the input coefficients are large.
"""

import os

import numpy as np

from wrightmaps import ConvolutionSpec, WrightParams, convolve, random_coefficients
from wrightmaps.cli import curves_to_svg, sample_boundary_curves

OUT = os.path.join(os.path.dirname(__file__), "demo_out")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(12)
f = random_coefficients(rng, 12)
spec = ConvolutionSpec(WrightParams(2, 1.5, 2, 1.5), WrightParams(2, 1.5, 2, 1.5), 0.45)
img = convolve(f, spec)

radii = [0.3, 0.5, 0.7, 0.9, 0.99]
curves = sample_boundary_curves(img, radii, 720)
path = os.path.join(OUT, "convolved_disk.svg")
with open(path, "w", encoding="utf-8") as fh:
    fh.write(curves_to_svg(curves, 800, 800))

spans = [float(np.max(np.abs(c))) for c in curves]
print("outer |f| per radius:", [round(s, 4) for s in spans])
print(f"wrote {path}")
