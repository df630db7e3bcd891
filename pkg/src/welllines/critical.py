"""Critical strengths: radii at which a strength circle touches a Lambert line.

Every tangency sits on the vertical line u = -1, at a height v_t where the
point (-1, v_t) lies on some Lambert line; the critical radius is then
sqrt(1 + v_t^2).  The image of that vertical line under F is the spiral
z(v) = (-1 + iv) exp(-1 + iv), and the tangencies are where the spiral meets
the axial rays.  Along the spiral arg z = v + pi - arctan(v), which gives
the monotone scalar equation v - arctan(v) = n pi / 2 for the n-th tangency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularInputError
from .lambertw import branch_of, forward_map
from .wmap import AxialRay, LambertLineSpec, Parity

__all__ = [
    "CriticalStrength",
    "critical_strengths",
    "tangency_ordinate",
    "spiral_crossing_ordinates",
    "tangency_residual",
    "spiral_point",
    "spiral_samples",
    "sensitivity_margin",
]

BISECT_TOL = 1e-14

# ray hit by the n-th tangency cycles with n mod 4 (arg z = n pi/2 + pi)
_RAY_CYCLE = (AxialRay.NEG_REAL, AxialRay.NEG_IMAG, AxialRay.POS_REAL, AxialRay.POS_IMAG)


@dataclass(frozen=True)
class CriticalStrength:
    index_n: int
    v_t: float
    R_c: float
    parity: Parity
    z_image: complex
    ray: AxialRay

    @property
    def tangency_point(self) -> complex:
        return complex(-1.0, self.v_t)

    @property
    def branch(self) -> int:
        return branch_of(self.tangency_point, on_cut=self.ray is AxialRay.NEG_REAL)

    @property
    def line(self) -> LambertLineSpec:
        return LambertLineSpec(self.branch, self.ray)


def _bisect(f, lo, hi, tol):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def tangency_ordinate(n: int) -> float:
    """Root of v - arctan(v) = n pi/2 on [n pi/2, (n+1) pi/2]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    target = n * math.pi / 2
    return _bisect(lambda v: v - math.atan(v) - target, target, target + math.pi / 2, BISECT_TOL)


def spiral_point(v: float) -> complex:
    """F(-1 + iv)."""
    return forward_map(complex(-1.0, v))


def spiral_crossing_ordinates(count: int, samples_per_quarter: int = 32) -> list[float]:
    """Heights v > 0 where the spiral crosses an axis, found geometrically.

    Scans the spiral for sign changes of Re z and Im z and refines each one
    by bisection.  Independent of the arctan form used by tangency_ordinate.
    """
    out = []
    step = (math.pi / 2) / samples_per_quarter
    v0 = step * 0.5  # v = 0 is the branch point on the real axis; skip it
    z0 = spiral_point(v0)
    while len(out) < count:
        v1 = v0 + step
        z1 = spiral_point(v1)
        hits = []
        if (z0.real > 0) != (z1.real > 0):
            hits.append(_bisect(lambda v: spiral_point(v).real, v0, v1, BISECT_TOL))
        if (z0.imag > 0) != (z1.imag > 0):
            hits.append(_bisect(lambda v: spiral_point(v).imag, v0, v1, BISECT_TOL))
        out.extend(sorted(hits))
        v0, z0 = v1, z1
    return out[:count]


def _critical(n, v_t):
    z = spiral_point(v_t)
    ray = _RAY_CYCLE[n % 4]
    R_c = math.e * abs(z)
    parity = Parity.EVEN if n % 2 == 1 else Parity.ODD
    return CriticalStrength(n, v_t, R_c, parity, z, ray)


def critical_strengths(count: int) -> list[CriticalStrength]:
    """The first ``count`` critical strengths, ordered by tangency height.

    The tangency at (-1, 0) on the real lines through the branch point is not
    counted.  Odd n are tangent to imaginary lines (even states), even n to
    real lines (odd states).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    return [_critical(n, tangency_ordinate(n)) for n in range(1, count + 1)]


def _line_u(v, parity):
    c, s = math.cos(v), math.sin(v)
    if parity is Parity.EVEN:
        if abs(c) < 1e-12:
            raise SingularInputError(f"v = {v} is an asymptote of the imaginary lines")
        return v * s / c
    if abs(s) < 1e-12:
        raise SingularInputError(f"v = {v} is an asymptote of the real lines")
    return -v * c / s


def tangency_residual(v_t: float, parity: Parity) -> float:
    """|slope product + 1| at height v_t on the line of the given parity.

    The point is (u, v_t) with u = v tan v (even) or u = -v cot v (odd).
    du/dv = u(u + 1)/v + v holds on both kinds of line; the slope product is
    (dv/du) (v/u), which equals -1 exactly when u = -1.
    """
    if v_t <= 0:
        raise ValueError("v_t must be positive")
    u = _line_u(v_t, parity)
    if u == 0.0:
        raise SingularInputError("radius slope v/u is infinite at u = 0")
    du_dv = u * (u + 1.0) / v_t + v_t
    if du_dv == 0.0:
        raise SingularInputError("line is horizontal here")
    return abs((v_t / u) / du_dv + 1.0)


def spiral_samples(v_min: float, v_max: float, n: int) -> np.ndarray:
    """F(-1 + iv) at n uniform heights in [v_min, v_max]; |z| = sqrt(1+v^2)/e."""
    if not 0 <= v_min < v_max:
        raise ValueError("need 0 <= v_min < v_max")
    v = np.linspace(v_min, v_max, n)
    w = -1.0 + 1j * v
    return w * np.exp(w)


def sensitivity_margin(R: float) -> tuple[CriticalStrength, float]:
    """Nearest critical strength to R and the signed margin (R - R_c)/R_c."""
    if R <= 0:
        raise ValueError("R must be positive")
    # R_c(n) ~ n pi/2 + pi/2, so a couple beyond R covers the nearest one
    count = max(2, int(R / (math.pi / 2)) + 2)
    nearest = min(critical_strengths(count), key=lambda c: abs(R - c.R_c))
    return nearest, (R - nearest.R_c) / nearest.R_c
