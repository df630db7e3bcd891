"""
Critical strengths and the u = -1 spiral
========================================

A strength circle first touches a Lambert line on the vertical line u = -1.
The touching heights solve v - arctan v = n pi/2 and the radii are
sqrt(1 + v^2).
"""

import math

from welllines import critical_strengths, sensitivity_margin, tangency_residual
from welllines.critical import spiral_samples

for c in critical_strengths(6):
    print(
        f"n={c.index_n}  v_t={c.v_t:.6f}  R_c={c.R_c:.6f}  {c.parity.value:4s} "
        f"{str(c.line):15s} slope residual {tangency_residual(c.v_t, c.parity):.1e}"
    )

###############################################################################
# A well built a little above a critical strength sits close to the point
# where a new pair of states appears.
c, margin = sensitivity_margin(3 * math.pi / 2)
print(f"R = 3pi/2 is {100 * margin:.2f}% above R_c = {c.R_c:.4f}")

###############################################################################
# In the z-plane the line u = -1 becomes a spiral of modulus sqrt(1+v^2)/e;
# it meets an axis at every critical strength.
z = spiral_samples(0.0, 12.0, 7)
for zz in z:
    print(f"{zz.real:+.4f} {zz.imag:+.4f}i  |z|={abs(zz):.4f}")

###############################################################################
# Successive heights approach a spacing of pi/2, but only like 1/v^2.
crits = critical_strengths(40)
for n in (1, 5, 10, 20, 39):
    print(n, crits[n].v_t - crits[n - 1].v_t - math.pi / 2)
