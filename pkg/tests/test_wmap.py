"""Lambert lines: sampling invariants, classification, crossings and asymptotes."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from welllines import AxialRay, LambertLineSpec, LineKind, Parity, lambert_w, sample_lambert_line
from welllines.errors import MapOverflowError
from welllines.export import table1_record
from welllines.lambertw import forward_map
from welllines.wmap import (
    asymptotes,
    image_of_circle,
    line_asymptotes,
    parity_residual,
    v_axis_crossings,
)

BRANCHES = range(-3, 4)
ALL_SPECS = [LambertLineSpec(k, r) for k in BRANCHES for r in AxialRay]


def test_axial_rays():
    assert len(AxialRay) == 4
    assert {r.z0 for r in AxialRay} == {1, 1j, -1, -1j}
    for r in AxialRay:
        assert abs(r.z0) == 1
        assert cmath.phase(r.z0) == pytest.approx(r.angle)


@pytest.mark.parametrize("kind", list(LineKind))
def test_classification_follows_property_table(kind):
    row = table1_record(kind)
    rays = {r for r in AxialRay if r.kind is kind}
    assert {r.value for r in rays} == set(row["axial_ray"])
    assert kind.equation == row["equation"]
    assert kind.parity.value.upper() == row["wavefunction_parity"]
    for ray in rays:
        spec = LambertLineSpec(0, ray)
        assert spec.kind is kind
        assert spec.parity is kind.parity


def test_parity_kind_round_trip():
    for p in Parity:
        assert p.kind.parity is p


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_sampled_line_invariants(spec):
    c = sample_lambert_line(spec)
    w = c.points
    assert len(w) == len(c.params) >= 512
    assert np.all(np.diff(c.params) > 0)
    # on the right family of curves, relative to the size of z = w e^w
    res = np.abs(parity_residual(w, spec.kind))
    bound = 1e-12 * np.maximum(np.exp(-w.real), np.abs(w))
    assert np.all(res <= bound)
    # maps back onto the ray at the sampled parameter
    z = np.array([forward_map(x) for x in w])
    target = c.params * spec.ray.z0
    assert np.all(np.abs(z - target) <= 1e-10 * np.maximum(1.0, c.params))
    # continuity: no jumps between samples
    assert np.max(np.abs(np.diff(w))) <= 0.05


def test_corner_split_on_negative_real_ray():
    for k in (0, -1):
        c = sample_lambert_line(LambertLineSpec(k, AxialRay.NEG_REAL))
        (i,) = c.breaks
        assert c.params[i] == pytest.approx(1 / math.e, rel=1e-15)
        assert c.points[i] == -1
        segs = c.segments()
        assert len(segs) == 2 and segs[0][-1] == segs[1][0]


def test_linear_spacing():
    c = sample_lambert_line(LambertLineSpec(1, AxialRay.POS_IMAG), 1.0, 10.0, 20, "linear")
    assert c.params[0] == 1.0 and c.params[-1] == 10.0
    assert set(np.linspace(1.0, 10.0, 20)) <= set(c.params)


@pytest.mark.parametrize(
    "args",
    [(0.0, 1.0, 10, "log"), (2.0, 1.0, 10, "log"), (1.0, 2.0, 1, "log"), (1.0, 2.0, 10, "cubic")],
)
def test_sampling_rejects_bad_ranges(args):
    with pytest.raises(ValueError):
        sample_lambert_line(LambertLineSpec(0, AxialRay.POS_REAL), *args)


@pytest.mark.parametrize("k", range(-3, 4))
@pytest.mark.parametrize("ray", [AxialRay.POS_IMAG, AxialRay.POS_REAL])
def test_lines_are_mirrored_in_the_u_axis(k, ray):
    # conj W_k(conj z) = W_{-k}(z) away from the cut
    mirror = {AxialRay.POS_IMAG: AxialRay.NEG_IMAG, AxialRay.POS_REAL: AxialRay.POS_REAL}[ray]
    a = sample_lambert_line(LambertLineSpec(k, ray), n=64, max_levels=0)
    b = sample_lambert_line(LambertLineSpec(-k, mirror), n=64, max_levels=0)
    assert np.allclose(a.points.conjugate(), b.points, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("k", range(-3, 3))
def test_negative_real_lines_mirror_onto_neighbouring_branch(k):
    a = sample_lambert_line(LambertLineSpec(k, AxialRay.NEG_REAL), 0.5, 1e3, 64, max_levels=0)
    b = sample_lambert_line(LambertLineSpec(-k - 1, AxialRay.NEG_REAL), 0.5, 1e3, 64, max_levels=0)
    assert np.allclose(a.points.conjugate(), b.points, rtol=1e-12, atol=1e-12)


def test_diagram_has_no_left_right_symmetry():
    # u -> -u is not a symmetry: W_0 on the positive real ray has no mirror
    c = sample_lambert_line(LambertLineSpec(0, AxialRay.POS_REAL), 1.0, 100.0, 16)
    for w in c.points:
        assert abs(parity_residual(complex(-w.real, w.imag), LineKind.REAL)) > 1e-3 or w.imag == 0


# -- crossings --------------------------------------------------------------------


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_axis_crossings_lie_on_the_line(spec):
    for v in v_axis_crossings(spec, 20.0):
        m = round(v / (math.pi / 2))
        assert v == m * math.pi / 2
        want_even = table1_record(spec.kind)["ordinate_crossings"] == "EVEN"
        assert (m % 2 == 0) == want_even
        if v == 0:
            assert spec == LambertLineSpec(0, AxialRay.POS_IMAG) or spec == LambertLineSpec(0, AxialRay.NEG_IMAG)
            continue
        # the point i v is on this line: W_k of its image returns it
        z = 1j * v * cmath.exp(1j * v)
        z = complex(round(z.real / abs(z)) * abs(z), round(z.imag / abs(z)) * abs(z))
        assert abs(lambert_w(spec.branch, z) - 1j * v) < 1e-12 * max(1.0, abs(v))


@pytest.mark.parametrize("kind", list(LineKind))
def test_every_multiple_is_crossed_exactly_once(kind):
    v_max = 9 * math.pi / 2 + 0.1
    seen = []
    for spec in ALL_SPECS:
        if spec.kind is kind:
            seen.extend(x for x in v_axis_crossings(spec, v_max) if x != 0)
    start = 2 if kind is LineKind.IMAGINARY else 1
    expected = sorted(s * m * math.pi / 2 for m in range(start, 10, 2) for s in (1, -1))
    assert sorted(seen) == expected


def test_crossing_examples():
    assert v_axis_crossings(LambertLineSpec(0, AxialRay.POS_IMAG), 4.0) == [0.0]
    assert v_axis_crossings(LambertLineSpec(0, AxialRay.NEG_REAL), 4.0) == [math.pi / 2]
    assert v_axis_crossings(LambertLineSpec(0, AxialRay.NEG_IMAG), 4.0) == [0.0]
    assert v_axis_crossings(LambertLineSpec(1, AxialRay.NEG_IMAG), 4.0) == [math.pi]
    assert v_axis_crossings(LambertLineSpec(-1, AxialRay.POS_IMAG), 4.0) == [-math.pi]
    with pytest.raises(ValueError):
        v_axis_crossings(LambertLineSpec(0, AxialRay.NEG_REAL), 0.0)


# -- asymptotes ---------------------------------------------------------------------


def test_asymptote_parity_follows_property_table():
    for kind in LineKind:
        want_odd = table1_record(kind)["asymptotes"] == "ODD"
        spec = LambertLineSpec(1, next(r for r in AxialRay if r.kind is kind))
        for a in asymptotes(spec, 20.0):
            m = round(a / (math.pi / 2))
            assert a == pytest.approx(m * math.pi / 2)
            assert (m % 2 == 1) == want_odd


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_line_ends_approach_their_asymptotes(spec):
    a = line_asymptotes(spec)
    far = lambert_w(spec.branch, 1e300 * spec.ray.z0)
    assert abs(far.imag - a["u_to_plus_inf"]) < 0.05
    near = lambert_w(spec.branch, 1e-300 * spec.ray.z0)
    if a["u_to_minus_inf"] is None:
        assert abs(near) < 1e-250
    else:
        assert abs(near.imag - a["u_to_minus_inf"]) < 0.05


# -- circle image --------------------------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(R=st.floats(0.1, 20.0))
def test_circle_image_modulus(R):
    theta, z = image_of_circle(R, 257)
    assert theta[0] == 0 and theta[-1] == pytest.approx(2 * math.pi)
    assert np.allclose(np.abs(z), R * np.exp(R * np.cos(theta)), rtol=1e-13)
    assert np.max(np.abs(z)) == pytest.approx(R * math.exp(R), rel=1e-14)
    assert abs(z[0] - z[-1]) <= 1e-12 * abs(z[0])


def test_circle_image_errors():
    with pytest.raises(ValueError):
        image_of_circle(0.0, 64)
    with pytest.raises(ValueError):
        image_of_circle(1.0, 4)
    with pytest.raises(MapOverflowError):
        image_of_circle(800.0, 64)


def test_line_spec_text():
    assert str(LambertLineSpec(-1, AxialRay.NEG_REAL)) == "W(-1, NegReal)"
