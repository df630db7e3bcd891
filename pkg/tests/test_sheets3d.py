"""Sheet/cone intersection curves and their projections."""

import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from welllines import critical_strengths, intersection_curves, project
from welllines.sheets3d import Axis
from welllines.wmap import LineKind, parity_residual


def radius_on_line(kind, v):
    u = v * math.tan(v) if kind is LineKind.IMAGINARY else -v / math.tan(v)
    return math.hypot(u, v)


@pytest.fixture(scope="module")
def curves():
    return intersection_curves(8.7)


def test_four_sheets_below_eight_point_seven(curves):
    assert len(curves) == 4
    assert [str(c.spec) for c in curves] == ["W(1, NegImag)", "W(1, PosReal)", "W(1, PosImag)", "W(1, NegReal)"]


def test_minima_match_critical_strengths(curves):
    for c, crit in zip(curves, critical_strengths(4)):
        u, v, R = c.minimum()
        assert abs(R - crit.R_c) <= 1e-6
        assert abs(u + 1.0) <= 1e-6
        assert abs(v - crit.v_t) <= 1e-6


def test_minima_match_bounded_minimiser(curves):
    for c in curves:
        lo, hi = c.band
        res = minimize_scalar(
            lambda v: radius_on_line(c.spec.kind, v), bounds=(lo + 1e-6, hi - 1e-6), method="bounded",
            options={"xatol": 1e-12},
        )
        assert c.minimum()[2] == pytest.approx(res.fun, abs=1e-9)


def test_points_lie_on_line_and_cone(curves):
    for c in curves:
        u, v, R = c.u, c.v, c.R
        assert np.allclose(R, np.hypot(u, v), rtol=1e-15)
        assert np.all(R <= 8.7 * (1 + 1e-12))
        w = u + 1j * v
        res = np.abs(parity_residual(w, c.spec.kind))
        assert np.all(res <= 1e-12 * np.maximum(np.exp(-u), np.abs(w)))
        assert np.all(np.diff(v) > 0)
        lo, hi = c.band
        assert np.all((v > lo) & (v < hi))


def test_curve_count_tracks_critical_strengths():
    for R_max in (2.9, 3.0, 6.0, 12.0):
        expected = sum(1 for c in critical_strengths(10) if c.R_c <= R_max)
        assert len(intersection_curves(R_max, n=41)) == expected


def test_projections(curves):
    for axis, cols in ((Axis.U, [1, 2]), (Axis.V, [0, 2]), (Axis.R, [0, 1])):
        for arr, c in zip(project(curves, axis), curves):
            assert arr.shape == (len(c.points), 2)
            assert np.array_equal(arr, c.points[:, cols])
    assert len(project(curves, "u")) == 4


def test_projection_errors(curves):
    with pytest.raises(ValueError):
        project([], Axis.U)
    with pytest.raises(ValueError):
        project(curves, "w")


def test_r_max_validation():
    with pytest.raises(ValueError):
        intersection_curves(0.0)
