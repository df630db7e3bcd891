"""Intersections of Lambert sheets with the strength cone R = sqrt(u^2 + v^2).

Extruding a Lambert line along R gives a sheet; every bound state for every
strength lies on the curve where the sheet meets the cone.  Each curve is the
upper half-plane Lambert line itself with R = |w| attached, so its lowest
point is where a strength circle first touches the line.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .lambertw import branch_of, forward_map
from .wmap import AxialRay, LambertLineSpec, LineKind

__all__ = [
    "SheetCurve",
    "Axis",
    "intersection_curves",
    "project",
    "DEFAULT_R_MAX",
]

DEFAULT_R_MAX = 8.7


class Axis(enum.Enum):
    U = "u"
    V = "v"
    R = "R"


@dataclass
class SheetCurve:
    spec: LambertLineSpec
    points: np.ndarray  # (N, 3) columns u, v, R ordered by v
    band: tuple

    @property
    def u(self):
        return self.points[:, 0]

    @property
    def v(self):
        return self.points[:, 1]

    @property
    def R(self):
        return self.points[:, 2]

    def minimum(self):
        """(u, v, R) at the lowest sampled point."""
        return tuple(self.points[int(np.argmin(self.R))])


def _line_u(kind, v):
    if kind is LineKind.IMAGINARY:
        return v * np.tan(v)
    return -v / np.tan(v)


def _bands(kind, v_hi):
    """Open intervals of v > 0 that each hold one upper Lambert line.

    The line through the origin (imaginary, |v| < pi/2) and the real line
    ending at (-1, 0) never touch a circle from outside, so they are left out.
    """
    half = math.pi / 2
    m = 1
    while True:
        if kind is LineKind.IMAGINARY:
            lo, hi = (2 * m - 1) * half, (2 * m + 1) * half
        else:
            lo, hi = m * math.pi, (m + 1) * math.pi
        if lo > v_hi:
            return
        yield lo, hi
        m += 1


def _radius(kind, v):
    u = _line_u(kind, v)
    return math.hypot(u, v)


def _lowest_point(kind, lo, hi, h=1e-6):
    """Height of the lowest point of the line in (lo, hi).

    R^2 falls then rises across the band, so bisect on the sign of its
    central-difference slope.
    """

    def slope(v):
        return (_radius(kind, v + h) ** 2 - _radius(kind, v - h) ** 2) / (2 * h)

    a, b = lo + 1e-3, hi - 1e-3
    while b - a > 1e-13:
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        if slope(m) < 0:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def _edge(kind, a, b, R_max):
    """v between a (R <= R_max) and b (R > R_max) where R = R_max."""
    for _ in range(200):
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        if _radius(kind, m) <= R_max:
            a = m
        else:
            b = m
    return a


def _spec_for(kind, v, u):
    z = forward_map(complex(u, v))
    if kind is LineKind.IMAGINARY:
        ray = AxialRay.POS_IMAG if z.imag > 0 else AxialRay.NEG_IMAG
    else:
        ray = AxialRay.POS_REAL if z.real > 0 else AxialRay.NEG_REAL
    return LambertLineSpec(branch_of(complex(u, v), on_cut=ray is AxialRay.NEG_REAL), ray)


def intersection_curves(R_max: float = DEFAULT_R_MAX, n: int = 401) -> list[SheetCurve]:
    """Cone/sheet intersection curves for every sheet touched below R_max.

    For each band, the lowest point of R along the line is found by
    bisection on the slope of R^2; sheets whose minimum exceeds R_max are omitted.  The curve
    is then sampled in v over the part of the band with R <= R_max, with
    samples clustered towards the minimum so it is resolved.  Curves are
    ordered by the height of their minimum.
    """
    if not R_max > 0:
        raise ValueError("R_max must be positive")
    curves = []
    for kind in (LineKind.IMAGINARY, LineKind.REAL):
        for lo, hi in _bands(kind, R_max):
            v_min = _lowest_point(kind, lo, hi)
            if _radius(kind, v_min) > R_max:
                continue
            pad = 1e-12 * (hi - lo)
            v_lo = _edge(kind, v_min, lo + pad, R_max)
            v_hi = _edge(kind, v_min, hi - pad, R_max)
            # cosine clustering towards v_min from both sides
            s = 0.5 * (1.0 - np.cos(np.linspace(0.0, math.pi, n // 2 + 1)))
            left = v_min - (v_min - v_lo) * s[::-1]
            right = v_min + (v_hi - v_min) * s[1:]
            v = np.concatenate([left, right])
            u = _line_u(kind, v)
            pts = np.column_stack([u, v, np.hypot(u, v)])
            curves.append(SheetCurve(_spec_for(kind, v_min, float(_line_u(kind, v_min))), pts, (lo, hi)))
    curves.sort(key=lambda c: c.minimum()[1])
    return curves


def project(curves, axis) -> list[np.ndarray]:
    """Drop one coordinate from each curve.

    Along U gives (v, R), along V gives (u, R), along R gives (u, v), which
    is the ordinary Lambert line diagram.
    """
    if not curves:
        raise ValueError("no curves to project")
    axis = Axis(axis) if not isinstance(axis, Axis) else axis
    keep = {Axis.U: [1, 2], Axis.V: [0, 2], Axis.R: [0, 1]}[axis]
    return [c.points[:, keep].copy() for c in curves]
