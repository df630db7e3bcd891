"""
Lambert lines in the w-plane
============================

Each branch of W maps each axial ray of the z-plane to one curve in the
w-plane.  Curves from the imaginary rays satisfy u = v tan v, curves from
the real rays satisfy u = -v cot v.
"""

import math
from pathlib import Path

import numpy as np

from welllines import AxialRay, LambertLineSpec, sample_lambert_line, v_axis_crossings
from welllines.export import figure
from welllines.wmap import line_asymptotes, parity_residual

out = Path("demo_out")
out.mkdir(exist_ok=True)

###############################################################################
# Sample one line and check that it really is on its curve family.
spec = LambertLineSpec(1, AxialRay.POS_IMAG)
curve = sample_lambert_line(spec)
print(spec, "->", len(curve), "points,", spec.kind.equation)
print("max residual:", np.abs(parity_residual(curve.points, spec.kind)).max())

###############################################################################
# Where every line of branches -1..1 meets the v axis, in units of pi/2.
for k in (-1, 0, 1):
    for ray in AxialRay:
        s = LambertLineSpec(k, ray)
        hits = [round(v / (math.pi / 2)) for v in v_axis_crossings(s, 8.0)]
        print(f"{str(s):16s} crosses u = 0 at m pi/2, m = {hits}")

###############################################################################
# Horizontal asymptotes of a single line at its two ends.
print(line_asymptotes(LambertLineSpec(2, AxialRay.NEG_REAL)))

###############################################################################
# The whole diagram with asymptotes, and with the branch 0 / -1 real lines
# drawn shifted off the u axis.
for fid in ("3", "5"):
    path = out / f"figure{fid}.svg"
    path.write_text(figure(fid).draw())
    print("wrote", path)
