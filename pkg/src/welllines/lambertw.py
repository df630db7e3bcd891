"""Multi-branch complex Lambert W and its forward map F(w) = w exp(w).

Branches follow the standard numbering convention: the cut
of every branch runs along the negative real z axis (only (-inf, -1/e] for
k = 0) and values on a cut are the limits taken from above (counter-clockwise
continuity).  W_0 is real for real z >= -1/e and W_{-1} is real for real
z in [-1/e, 0).

Points in both planes are plain Python ``complex`` values.
"""

from __future__ import annotations

import cmath
import math
import operator

import numpy as np

from .errors import ConvergenceError, LambertWDomainError, MapOverflowError

__all__ = [
    "forward_map",
    "forward_map_array",
    "lambert_w",
    "branch_of",
    "MAX_EXP_ARG",
    "BRANCH_POINT",
]

MAX_EXP_ARG = 700.0
BRANCH_POINT = -math.exp(-1.0)
MAX_ITER = 64
STEP_TOL = 1e-15
NEAR_CORNER = 1e-3
NEAR_CUT = 1e-10

_PI = math.pi
_TWO_PI = 2.0 * math.pi
_E = math.e
_EPS = np.finfo(float).eps

# coefficients of w = -1 + p - p^2/3 + 11/72 p^3 - ..., p = sqrt(2(ez + 1))
_BP_SERIES = (
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
    -1963.0 / 204120.0,
    226287557.0 / 37623398400.0,
)


def forward_map(w):
    """Return z = w exp(w) from the expanded real/imaginary form.

    Raises MapOverflowError when Re(w) > 700.
    """
    w = complex(w)
    u, v = w.real, w.imag
    if not (math.isfinite(u) and math.isfinite(v)):
        raise ValueError(f"forward_map needs a finite argument, got {w!r}")
    if u > MAX_EXP_ARG:
        raise MapOverflowError(f"exp({u}) overflows")
    eu = math.exp(u)
    c, s = math.cos(v), math.sin(v)
    return complex(eu * (u * c - v * s), eu * (v * c + u * s))


def forward_map_array(w):
    """Vectorised forward_map over an array of complex values."""
    w = np.asarray(w, dtype=complex)
    u, v = w.real, w.imag
    if not np.all(np.isfinite(w)):
        raise ValueError("forward_map needs finite arguments")
    if np.any(u > MAX_EXP_ARG):
        raise MapOverflowError(f"exp({u.max()}) overflows")
    eu = np.exp(u)
    c, s = np.cos(v), np.sin(v)
    return eu * (u * c - v * s) + 1j * eu * (v * c + u * s)


def branch_of(w, on_cut=False):
    """Index k of the Lambert W branch whose range contains ``w``.

    The branch ranges are separated by the curves u = -v cot(v) with
    sin(v) of the same sign as v, i.e. the preimages of the negative real
    z axis.  A boundary curve belongs to the branch below it when v > 0 and
    to the branch below it (more negative k) when v < 0, which is the
    counter-clockwise continuity rule.  The real half line u < -1 belongs
    to branch -1.

    With ``on_cut=True`` the point is known to be a preimage of the negative
    real axis, so it is classified by its band in v alone; this avoids
    rounding deciding which side of a boundary it falls on.
    """
    w = complex(w)
    u, v = w.real, w.imag
    if v == 0.0:
        return -1 if u < -1.0 else 0
    a = abs(v)
    j = int(a // _TWO_PI)
    r = a - _TWO_PI * j
    if r == 0.0 or r >= _PI:
        # strictly between two boundary curves
        k = j if r == 0.0 else j + 1
        return k if v > 0 else -k
    if on_cut:
        return j if v > 0 else -(j + 1)
    b = -a * math.cos(a) / math.sin(a)
    if v > 0:
        return j if u >= b else j + 1
    return -j if u > b else -(j + 1)


def _bp_series(p):
    acc = 0.0
    for c in reversed(_BP_SERIES):
        acc = acc * p + c
    return acc


def _halley(w, z, real=False):
    """Halley iteration for w exp(w) = z.  Returns (w, converged)."""
    exp = math.exp if real else cmath.exp
    best, best_res = w, math.inf
    scale = max(1.0, abs(z))
    for _ in range(MAX_ITER):
        if w.real > MAX_EXP_ARG:
            break  # runaway iterate from a poor starting value
        ew = exp(w)
        f = w * ew - z
        res = abs(f)
        if res < best_res:
            best, best_res = w, res
        if f == 0:
            return w, True
        wp1 = w + 1.0
        if wp1 == 0:
            return w, res <= 4 * _EPS * scale
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w = w - dw
        if not (math.isfinite(abs(w))):
            break
        if abs(dw) <= STEP_TOL * max(1.0, abs(w)):
            return w, True
    # step criterion can stall at the rounding floor of an ill-conditioned
    # root (near the branch point); accept a residual at that floor
    if best_res <= 8 * _EPS * scale * max(1.0, abs(best)):
        return best, True
    return best, False


def _real_w0(x):
    if 1.0 + _E * x <= 4 * _EPS:
        return -1.0
    if x < -0.25:
        w = _bp_series(math.sqrt(2.0 * (_E * x + 1.0)))
    elif x <= 3.0:
        w = math.log1p(x) * (1.0 - 0.3 * math.log1p(x) / (1.0 + math.log1p(x)))
    else:
        l1 = math.log(x)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    w, ok = _halley(w, x, real=True)
    if not ok:
        raise ConvergenceError(f"W_0({x}) did not converge", 0, x)
    return w


def _real_wm1(x):
    if 1.0 + _E * x <= 4 * _EPS:
        return -1.0
    if x < -0.25:
        w = _bp_series(-math.sqrt(2.0 * (_E * x + 1.0)))
    else:
        l1 = math.log(-x)
        l2 = math.log(-l1)
        w = l1 - l2 + l2 / l1
    w, ok = _halley(w, x, real=True)
    if not ok:
        raise ConvergenceError(f"W_-1({x}) did not converge", -1, x)
    return w


def _guesses(k, z):
    near = abs(z - BRANCH_POINT) < 0.3
    if near and (k == 0 or (k == -1 and z.imag >= 0) or (k == 1 and z.imag < 0)):
        p = cmath.sqrt(2.0 * (_E * z + 1.0))
        yield _bp_series(p if k == 0 else -p)
    if k == 0 and abs(z) < 0.5:
        yield z * (1.0 - z + 1.5 * z * z)
    if k == 0 and abs(z) < 10.0 and z != -1:
        yield cmath.log(1.0 + z)
    l1 = cmath.log(z) + _TWO_PI * k * 1j
    if abs(l1) >= 1.0:  # the asymptotic form is useless for small L1
        l2 = cmath.log(l1)
        yield l1 - l2 + l2 / l1
    if k == 0 and abs(z) >= 10.0:
        yield cmath.log(1.0 + z)


def _continuation(k, z, on_cut):
    """Follow the branch in from a large-|z| point on the same ray."""
    w = None
    for s in np.geomspace(1e6, 1.0, 61):
        zs = z * float(s)
        if on_cut:
            zs = complex(zs.real, 0.0)
        if w is None:
            l1 = cmath.log(zs) + _TWO_PI * k * 1j
            l2 = cmath.log(l1)
            w = l1 - l2 + l2 / l1
        w, ok = _halley(w, zs)
        if not ok:
            return None
    return w


def lambert_w(k, z):
    """Branch ``k`` of the Lambert W function at ``z``.

    Parameters
    ----------
    k : int
        Branch index, any integer.
    z : complex
        Finite argument.  ``z = 0`` is only allowed on branch 0.

    Returns
    -------
    complex
        ``w`` with ``w * exp(w) == z`` lying in the range of branch ``k``.

    Raises
    ------
    LambertWDomainError
        ``z == 0`` with ``k != 0``.
    ConvergenceError
        Halley refinement failed to converge within 64 iterations.
    """
    k = operator.index(k)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"lambert_w needs a finite argument, got {z!r}")
    if z == 0:
        if k == 0:
            return 0j
        raise LambertWDomainError(f"W_{k}(0) is undefined")

    on_cut = z.imag == 0.0 and z.real < 0.0
    if z.imag == 0.0:
        # drop a signed zero so the cut is always approached from above
        z = complex(z.real, 0.0)
        x = z.real
        if k == 0 and x >= BRANCH_POINT:
            return complex(_real_w0(x), 0.0)
        if k == -1 and BRANCH_POINT <= x < 0.0:
            return complex(_real_wm1(x), 0.0)

    if abs(z - BRANCH_POINT) < NEAR_CORNER and k in (-1, 0, 1):
        if k == 0 or (k == -1 and z.imag >= 0) or (k == 1 and z.imag < 0):
            p = cmath.sqrt(2.0 * (_E * z + 1.0))
            w0 = _bp_series(p if k == 0 else -p)
            w, ok = _halley(w0, z)
            if ok and _in_branch(w, k, z, on_cut):
                return w

    for w0 in _guesses(k, z):
        w, ok = _halley(w0, z)
        if ok and _in_branch(w, k, z, on_cut):
            return w
    w = _continuation(k, z, on_cut)
    if w is not None and _in_branch(w, k, z, on_cut):
        return w
    raise ConvergenceError(f"W_{k}({z}) did not converge", k, z)


def _in_branch(w, k, z, on_cut):
    if branch_of(w, on_cut) == k:
        return True
    if z.real < 0.0 and abs(z.imag) <= NEAR_CUT * abs(z):
        # w sits within rounding of a boundary curve: the upper boundary
        # of branch k when z is just above the cut, else the lower one
        # (owned by branch k - 1)
        return branch_of(w, on_cut=True) == (k if z.imag >= 0 else k - 1)
    return False
