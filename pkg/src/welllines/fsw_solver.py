"""Bound states of the 1-D finite square well as circle/Lambert-line crossings.

A well of strength R has its states at the points (u, v) of the circle
u^2 + v^2 = R^2 that lie on an imaginary Lambert line (even states,
u = v tan v) or a real Lambert line (odd states, u = -v cot v).  On the
circle w = R exp(i theta) these are the zeros of

    g_even(theta) = u cos v - v sin v  = exp(-u) Re F(w)
    g_odd(theta)  = v cos v + u sin v  = exp(-u) Im F(w)

which, unlike u - v tan v, have no poles.  ``solve_states`` brackets them in
the w-plane; ``states_via_z_plane`` finds the same points as the axis
crossings of the z-plane image of the circle.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .critical import critical_strengths
from .errors import ConsistencyError, ConvergenceError
from .lambertw import forward_map
from .wmap import Parity, image_of_circle

__all__ = [
    "WellParams",
    "BoundState",
    "SolveOptions",
    "strength_from_params",
    "solve_states",
    "states_via_z_plane",
    "energy_of_state",
    "physical_state_count",
    "default_tolerance",
]

NEAR_CRITICAL_GAP = 1e-6
NEAR_CRITICAL_RTOL = 1e-4
THETA_TOL = 1e-13


def default_tolerance() -> float:
    """Residual tolerance, overridable through WELLLINES_TOL."""
    raw = os.environ.get("WELLLINES_TOL")
    if raw is None:
        return 1e-10
    tol = float(raw)
    if not tol > 0:
        raise ValueError(f"WELLLINES_TOL must be positive, got {raw!r}")
    return tol


@dataclass(frozen=True)
class WellParams:
    half_width_L: float
    depth_V0: float
    mass_m: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("half_width_L", "depth_V0", "mass_m", "hbar"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be positive and finite, got {val!r}")


@dataclass(frozen=True)
class BoundState:
    parity: Parity
    u: float
    v: float
    R: float
    quadrant: int
    theta: float
    near_critical: bool = False

    @property
    def w(self) -> complex:
        return complex(self.u, self.v)


@dataclass(frozen=True)
class SolveOptions:
    include_negative_u: bool = True
    include_lower_half_plane: bool = False
    tolerance: float = None
    near_critical_rtol: float = NEAR_CRITICAL_RTOL

    def __post_init__(self):
        if self.tolerance is None:
            object.__setattr__(self, "tolerance", default_tolerance())
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


def strength_from_params(p: WellParams) -> float:
    """Dimensionless strength R = (L / hbar) sqrt(2 m V0)."""
    R = p.half_width_L / p.hbar * math.sqrt(2.0 * p.mass_m * p.depth_V0)
    if not math.isfinite(R):
        raise ValueError("strength is not finite")
    return R


def energy_of_state(s: BoundState, p: WellParams, rtol: float = 1e-9) -> float:
    """Bound-state energy E = -u^2 hbar^2 / (2 m L^2)."""
    R = strength_from_params(p)
    if abs(R - s.R) > rtol * max(R, s.R):
        raise ConsistencyError(f"state has R = {s.R} but the well has R = {R}")
    return -(s.u**2) * p.hbar**2 / (2.0 * p.mass_m * p.half_width_L**2)


def physical_state_count(R: float) -> int:
    """Number of u > 0, v > 0 states: floor(2R/pi) + 1."""
    return int(math.floor(2.0 * R / math.pi)) + 1


def _g(parity, R, theta):
    u, v = R * math.cos(theta), R * math.sin(theta)
    if parity is Parity.EVEN:
        return u * math.cos(v) - v * math.sin(v)
    return v * math.cos(v) + u * math.sin(v)


def _g_odd_scaled(R, theta):
    """g_odd / v, whose sign matches g_odd in the upper half plane and which
    stays finite at the v = 0 ends of the interval."""
    u, v = R * math.cos(theta), R * math.sin(theta)
    if v == 0.0:
        return 1.0 + u
    return math.cos(v) + u * math.sin(v) / v


def _grid(R, lo, hi, extra=()):
    per_quadrant = math.ceil(16 * R / math.pi) + 16
    n = 2 * per_quadrant + 1
    pts = np.linspace(lo, hi, n)
    if extra:
        pts = np.unique(np.concatenate([pts, [x for x in extra if lo < x < hi]]))
    return pts


def _bisect_theta(f, a, b, fa):
    while b - a > THETA_TOL:
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def _upper_roots_wplane(R, parity):
    """Zeros of g in theta in (0, pi), bracketed on a grid that always has a
    node at u = -1, where any near-coincident pair of roots straddles."""
    theta_t = math.acos(-1.0 / R) if R > 1.0 else None
    extra = (theta_t,) if theta_t is not None else ()
    grid = _grid(R, 0.0, math.pi, extra)
    if parity is Parity.ODD:
        f = lambda th: _g_odd_scaled(R, th)  # noqa: E731
    else:
        f = lambda th: _g(parity, R, th)  # noqa: E731
    vals = [f(th) for th in grid]
    roots = []
    for i in range(len(grid) - 1):
        a, b, fa, fb = grid[i], grid[i + 1], vals[i], vals[i + 1]
        if fa == 0.0 and 0 < i:
            roots.append(a)
        elif (fa > 0) != (fb > 0) and fb != 0.0:
            roots.append(_bisect_theta(f, a, b, fa))
    return roots


def _quadrant(u, v):
    if v > 0:
        return 1 if u >= 0 else 2
    return 4 if u >= 0 else 3


def _assemble(R, roots_by_parity, opts):
    crit = _near_critical_R(R, opts.near_critical_rtol)
    states = []
    for parity, thetas in roots_by_parity.items():
        thetas = sorted(thetas)
        flags = [False] * len(thetas)
        for i in range(len(thetas) - 1):
            gap = thetas[i + 1] - thetas[i]
            straddle = crit is not None and crit.parity is parity and thetas[i] < math.acos(-1.0 / R) < thetas[i + 1]
            if gap < NEAR_CRITICAL_GAP or straddle:
                flags[i] = flags[i + 1] = True
        for th, flag in zip(thetas, flags):
            mirrors = [th]
            if opts.include_lower_half_plane:
                mirrors.append(2 * math.pi - th)
            for t in mirrors:
                # the lower state is the exact mirror of the upper one
                u, v = R * math.cos(th), R * math.sin(th)
                if t > math.pi:
                    v = -v
                if u < 0 and not opts.include_negative_u:
                    continue
                states.append(BoundState(parity, u, v, R, _quadrant(u, v), t, flag))
    for s in states:
        res = abs(_g(s.parity, R, s.theta))
        if res > opts.tolerance:
            raise ConvergenceError(f"state at theta={s.theta} has residual {res:.3g} > {opts.tolerance:.3g}")
    states.sort(key=lambda s: (s.parity is not Parity.EVEN, s.v < 0, abs(s.v)))
    return states


def _near_critical_R(R, rtol):
    if R <= 1.0:
        return None
    count = int(R / (math.pi / 2)) + 2
    for c in critical_strengths(count):
        if abs(R - c.R_c) <= rtol * c.R_c:
            return c
    return None


def solve_states(R: float, opts: SolveOptions | None = None) -> list[BoundState]:
    """All bound states of a well of strength R.

    States are returned even parity first, then odd; within a parity upper
    half-plane states precede their mirrors and are ordered by |v|.  The
    v = 0 points (R, 0) and (-R, 0) are never states.

    A pair of same-parity states is flagged ``near_critical`` when the two
    are within 1e-6 rad of each other, or when R is within
    ``opts.near_critical_rtol`` of a critical strength and the pair straddles
    the tangency direction u = -1.
    """
    if not R > 0:
        raise ValueError("R must be positive")
    opts = opts or SolveOptions()
    roots = {p: _upper_roots_wplane(R, p) for p in (Parity.EVEN, Parity.ODD)}
    return _assemble(R, roots, opts)


def _zplane_roots(R, n_grid):
    theta, z = image_of_circle(R, n_grid)
    half = len(theta) // 2 + 1  # theta[half-1] == pi for odd n_grid
    theta, z = theta[:half], z[:half]
    comp = {Parity.EVEN: lambda zz: zz.real, Parity.ODD: lambda zz: zz.imag}
    out = {}
    for parity, part in comp.items():
        vals = part(z).copy()
        if parity is Parity.ODD:
            # Im F vanishes identically at v = 0; use its sign just inside
            vals[0] = math.copysign(1.0, 1.0 + R)
            vals[-1] = math.copysign(1.0, 1.0 - R) if R != 1.0 else 0.0

        def f(th, part=part):
            return part(forward_map(R * complex(math.cos(th), math.sin(th))))

        roots = []
        for i in range(len(theta) - 1):
            a, b, fa, fb = theta[i], theta[i + 1], vals[i], vals[i + 1]
            if fa == 0.0 or fb == 0.0:
                if fb == 0.0 and 0 < i + 1 < len(theta) - 1:
                    roots.append(b)
                continue
            if (fa > 0) != (fb > 0):
                roots.append(_bisect_theta(f, a, b, fa))
        roots.extend(_grazing_pairs(f, theta, vals))
        out[parity] = roots
    return out


def _grazing_pairs(f, theta, vals):
    """Pairs of roots hidden inside one grid cell.

    Where |f| has a sampled local minimum without a sign change, the image
    curve may dip across the axis and come back between samples.  Locate the
    extremum of f there; if its sign differs, bracket a root on each side.
    """
    found = []
    last = -2
    for i in range(1, len(theta) - 1):
        if i == last + 1:
            continue
        a, m, b = vals[i - 1], vals[i], vals[i + 1]
        if not ((a > 0) == (m > 0) == (b > 0)):
            continue
        if not (abs(m) <= abs(a) and abs(m) <= abs(b)):
            continue
        sign = 1.0 if m > 0 else -1.0
        res = minimize_scalar(
            lambda th: sign * f(th),
            bounds=(theta[i - 1], theta[i + 1]),
            method="bounded",
            options={"xatol": 1e-14},
        )
        th_x, f_x = res.x, f(res.x)
        if (f_x > 0) != (m > 0) and f_x != 0.0:
            found.append(_bisect_theta(f, theta[i - 1], th_x, a))
            found.append(_bisect_theta(f, th_x, theta[i + 1], f_x))
            last = i
    return found


def states_via_z_plane(R: float, opts: SolveOptions | None = None) -> list[BoundState]:
    """Bound states from the axis crossings of the image of the circle.

    The image z(theta) = F(R e^{i theta}) crosses the imaginary axis at even
    states and the real axis at odd states.  Crossings are located on the
    sampled image curve and refined by bisection in theta.
    """
    if not R > 0:
        raise ValueError("R must be positive")
    opts = opts or SolveOptions()
    per_quadrant = math.ceil(16 * R / math.pi) + 16
    roots = _zplane_roots(R, 4 * per_quadrant + 1)
    return _assemble(R, roots, opts)
