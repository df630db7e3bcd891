"""Lambert lines in the w-plane and their axial rays in the z-plane.

A Lambert line is the image of one axial ray of the z-plane under one branch
of W.  Lines whose ray is imaginary satisfy u = v tan(v) (even states),
lines whose ray is real satisfy u = -v cot(v) (odd states).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, MapOverflowError
from .lambertw import BRANCH_POINT, MAX_EXP_ARG, branch_of, forward_map_array, lambert_w

__all__ = [
    "AxialRay",
    "LineKind",
    "Parity",
    "LambertLineSpec",
    "SampledCurve",
    "sample_lambert_line",
    "v_axis_crossings",
    "asymptotes",
    "line_asymptotes",
    "image_of_circle",
    "parity_residual",
    "MAX_GAP",
    "MAX_REFINE_LEVELS",
]

MAX_GAP = 0.05
MAX_REFINE_LEVELS = 20
CORNER_T = -BRANCH_POINT  # t = 1/e on the negative real ray


class AxialRay(enum.Enum):
    POS_REAL = "PosReal"
    POS_IMAG = "PosImag"
    NEG_REAL = "NegReal"
    NEG_IMAG = "NegImag"

    @property
    def z0(self) -> complex:
        return _RAY_UNIT[self]

    @property
    def angle(self) -> float:
        """Argument of z0 in (-pi, pi]."""
        return _RAY_ANGLE[self]

    @property
    def kind(self) -> "LineKind":
        if self in (AxialRay.POS_IMAG, AxialRay.NEG_IMAG):
            return LineKind.IMAGINARY
        return LineKind.REAL

    @classmethod
    def of(cls, z: complex) -> "AxialRay":
        """Nearest axial ray to a nonzero z."""
        if abs(z.real) >= abs(z.imag):
            return cls.POS_REAL if z.real > 0 else cls.NEG_REAL
        return cls.POS_IMAG if z.imag > 0 else cls.NEG_IMAG


_RAY_UNIT = {
    AxialRay.POS_REAL: 1 + 0j,
    AxialRay.POS_IMAG: 1j,
    AxialRay.NEG_REAL: -1 + 0j,
    AxialRay.NEG_IMAG: -1j,
}
_RAY_ANGLE = {
    AxialRay.POS_REAL: 0.0,
    AxialRay.POS_IMAG: math.pi / 2,
    AxialRay.NEG_REAL: math.pi,
    AxialRay.NEG_IMAG: -math.pi / 2,
}


class Parity(enum.Enum):
    """Parity of the FSW wavefunction."""

    EVEN = "Even"
    ODD = "Odd"

    @property
    def kind(self) -> "LineKind":
        return LineKind.IMAGINARY if self is Parity.EVEN else LineKind.REAL


class LineKind(enum.Enum):
    """Which z-plane axis a Lambert line maps onto."""

    IMAGINARY = "Imaginary"
    REAL = "Real"

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self is LineKind.IMAGINARY else Parity.ODD

    @property
    def equation(self) -> str:
        return "u = v tan(v)" if self is LineKind.IMAGINARY else "u = -v cot(v)"


@dataclass(frozen=True)
class LambertLineSpec:
    branch: int
    ray: AxialRay

    @property
    def kind(self) -> LineKind:
        return self.ray.kind

    @property
    def parity(self) -> Parity:
        return self.ray.kind.parity

    def __str__(self):
        return f"W({self.branch}, {self.ray.value})"


@dataclass
class SampledCurve:
    """Points w_i = W_k(t_i z0) of one Lambert line, ordered by t."""

    spec: LambertLineSpec
    points: np.ndarray
    params: np.ndarray
    breaks: tuple = field(default=())

    def __len__(self):
        return len(self.points)

    @property
    def u(self):
        return self.points.real

    @property
    def v(self):
        return self.points.imag

    def segments(self):
        """Split at corner indices; each piece is a smooth polyline."""
        edges = [0, *self.breaks, len(self.points) - 1]
        return [self.points[a : b + 1] for a, b in zip(edges[:-1], edges[1:])]


def parity_residual(w, kind: LineKind):
    """exp(-u) times Re F(w) (imaginary lines) or Im F(w) (real lines).

    Pole-free form of u - v tan v / u + v cot v; zero exactly on the line.
    Works elementwise on arrays.
    """
    w = np.asarray(w, dtype=complex)
    u, v = w.real, w.imag
    if kind is LineKind.IMAGINARY:
        return u * np.cos(v) - v * np.sin(v)
    return v * np.cos(v) + u * np.sin(v)


def _t_grid(t_min, t_max, n, spacing):
    if spacing == "log":
        return np.geomspace(t_min, t_max, n)
    if spacing == "linear":
        return np.linspace(t_min, t_max, n)
    raise ValueError(f"unknown spacing {spacing!r}")


def _eval(spec, t):
    z = complex(t) * spec.ray.z0
    if spec.ray in (AxialRay.POS_REAL, AxialRay.NEG_REAL):
        z = complex(z.real, 0.0)
    else:
        z = complex(0.0, z.imag)
    try:
        return lambert_w(spec.branch, z)
    except ConvergenceError as exc:
        raise ConvergenceError(f"{spec} failed at t={t!r}: {exc}", spec.branch, z) from exc


def _refined(spec, ts, max_gap, max_levels):
    ts = [float(t) for t in ts]
    ws = [_eval(spec, t) for t in ts]
    out_t, out_w = [ts[0]], [ws[0]]
    for t1, w1 in zip(ts[1:], ws[1:]):
        _bisect_gap(spec, out_t[-1], out_w[-1], t1, w1, max_gap, max_levels, out_t, out_w)
        out_t.append(t1)
        out_w.append(w1)
    return out_t, out_w


def _bisect_gap(spec, ta, wa, tb, wb, max_gap, levels, out_t, out_w):
    if levels <= 0 or abs(wb - wa) <= max_gap:
        return
    # geometric midpoint keeps log-spaced grids log-spaced
    tm = math.sqrt(ta * tb) if ta > 0 else 0.5 * (ta + tb)
    if not ta < tm < tb:
        return
    wm = _eval(spec, tm)
    _bisect_gap(spec, ta, wa, tm, wm, max_gap, levels - 1, out_t, out_w)
    out_t.append(tm)
    out_w.append(wm)
    _bisect_gap(spec, tm, wm, tb, wb, max_gap, levels - 1, out_t, out_w)


def sample_lambert_line(
    spec: LambertLineSpec,
    t_min: float = 1e-8,
    t_max: float = 1e3,
    n: int = 512,
    spacing: str = "log",
    *,
    max_gap: float = MAX_GAP,
    max_levels: int = MAX_REFINE_LEVELS,
) -> SampledCurve:
    """Sample w = W_k(t z0) for t in [t_min, t_max].

    The base grid is refined by bisection in t wherever consecutive points
    are more than ``max_gap`` apart in the w-plane.  Real lines of branches
    0 and -1 on the negative real ray have a corner at t = 1/e (w = -1);
    they are sampled as two pieces meeting exactly at the corner and the
    corner index is recorded in ``breaks``.
    """
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    if n < 2:
        raise ValueError("need n >= 2")
    ts = _t_grid(t_min, t_max, n, spacing)
    corner = spec.ray is AxialRay.NEG_REAL and spec.branch in (0, -1) and t_min < CORNER_T < t_max
    if corner:
        lo = ts[ts < CORNER_T]
        hi = ts[ts > CORNER_T]
        t_a, w_a = _refined(spec, np.append(lo, CORNER_T), max_gap, max_levels)
        t_b, w_b = _refined(spec, np.insert(hi, 0, CORNER_T), max_gap, max_levels)
        t_all = t_a + t_b[1:]
        w_all = w_a + w_b[1:]
        breaks = (len(t_a) - 1,)
    else:
        t_all, w_all = _refined(spec, ts, max_gap, max_levels)
        breaks = ()
    return SampledCurve(spec, np.array(w_all, dtype=complex), np.array(t_all), breaks)


def _line_through_axis(m, spec):
    """Does spec's line pass through w = i m pi/2?"""
    v = m * math.pi / 2
    # F(iv) = iv e^{iv} = i^(m+1) v exactly
    turns = (m + 1) % 4
    sign = 1 if v > 0 else -1
    ray = [AxialRay.POS_REAL, AxialRay.POS_IMAG, AxialRay.NEG_REAL, AxialRay.NEG_IMAG][
        turns if sign > 0 else (turns + 2) % 4
    ]
    if ray is not spec.ray:
        return False
    return branch_of(complex(0.0, v), on_cut=ray is AxialRay.NEG_REAL) == spec.branch


def v_axis_crossings(spec: LambertLineSpec, v_max: float) -> list[float]:
    """Ordinates (|v| <= v_max) where this Lambert line meets u = 0.

    Crossings are the multiples of pi/2 of the right parity (even for
    imaginary lines, odd for real lines) whose point i v maps onto this
    line's ray and lies in this line's branch.  The origin only counts for
    the branch 0 imaginary lines, which pass through it; the real lines only
    end there.
    """
    if v_max <= 0:
        raise ValueError("v_max must be positive")
    want_even = spec.kind is LineKind.IMAGINARY
    m_max = int(math.floor(v_max / (math.pi / 2) + 1e-12))
    out = []
    for m in range(-m_max, m_max + 1):
        if (m % 2 == 0) != want_even:
            continue
        if m == 0:
            if want_even and spec.branch == 0:
                out.append(0.0)
            continue
        if _line_through_axis(m, spec):
            out.append(m * math.pi / 2)
    return out


def asymptotes(spec: LambertLineSpec, v_max: float) -> list[float]:
    """Positive horizontal asymptote ordinates up to v_max for the kind of line.

    Imaginary lines are asymptotic to odd multiples of pi/2, real lines to
    even multiples.  See ``line_asymptotes`` for the asymptotes of a single
    branch.
    """
    start = 1 if spec.kind is LineKind.IMAGINARY else 2
    out = []
    m = start
    while m * math.pi / 2 <= v_max:
        out.append(m * math.pi / 2)
        m += 2
    return out


def line_asymptotes(spec: LambertLineSpec) -> dict:
    """Asymptotic ordinates of one sampled line as u -> +inf and u -> -inf.

    From W_k(z) ~ L - log L with L = log z + 2 pi i k: along the ray,
    Im w tends to arg(z0) + 2 pi k as t -> inf, and to that value minus pi
    (plus pi when it is negative) as t -> 0.  Branch 0 has no u -> -inf end
    because W_0(t z0) -> 0.
    """
    a = spec.ray.angle + 2 * math.pi * spec.branch
    plus = a
    if spec.branch == 0:
        minus = None
    elif a > 0:
        minus = a - math.pi
    else:
        minus = a + math.pi
    return {"u_to_plus_inf": plus, "u_to_minus_inf": minus}


def image_of_circle(R: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """z-plane image of the strength circle |w| = R.

    Returns (theta, z) with theta uniform on [0, 2 pi] inclusive, so the
    curve is closed: z[0] == z[-1] up to rounding.
    """
    if R <= 0:
        raise ValueError("R must be positive")
    if n < 8:
        raise ValueError("need n >= 8")
    if R > MAX_EXP_ARG:
        raise MapOverflowError(f"exp({R}) overflows")
    theta = np.linspace(0.0, 2 * math.pi, n)
    return theta, forward_map_array(R * np.exp(1j * theta))
