"""Bound-state solver against a brute-force scan and textbook relations."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from welllines import (
    ConsistencyError,
    ConvergenceError,
    Parity,
    SolveOptions,
    WellParams,
    critical_strengths,
    energy_of_state,
    physical_state_count,
    solve_states,
    states_via_z_plane,
    strength_from_params,
)


def g_even(R, th):
    u, v = R * np.cos(th), R * np.sin(th)
    return u * np.cos(v) - v * np.sin(v)


def g_odd(R, th):
    u, v = R * np.cos(th), R * np.sin(th)
    return v * np.cos(v) + u * np.sin(v)


def scan_roots(R, n=100_000):
    """Sign changes on an open uniform theta grid over (0, pi), refined by brentq."""
    th = (np.arange(n) + 0.5) * math.pi / n
    out = {}
    for parity, g in ((Parity.EVEN, g_even), (Parity.ODD, g_odd)):
        vals = g(R, th)
        idx = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
        out[parity] = sorted(brentq(lambda t: g(R, t), th[i], th[i + 1], xtol=1e-15) for i in idx)
    return out


def thetas(states, parity):
    return sorted(s.theta for s in states if s.parity is parity)


@pytest.mark.parametrize("R", [0.3, 1.0, 2.0, 4.2, 5.0, 7.3, 10.0, 11.7, 15.0])
def test_matches_brute_force_scan(R):
    states = solve_states(R)
    ref = scan_roots(R)
    for parity in Parity:
        got = thetas(states, parity)
        assert len(got) == len(ref[parity])
        assert np.allclose(got, ref[parity], atol=1e-10)


def test_ground_state_of_strength_five():
    # u = sqrt(R^2 - v^2) = v tan v on (0, pi/2)
    v0 = brentq(lambda v: math.sqrt(25 - v * v) - v * math.tan(v), 1e-9, math.pi / 2 - 1e-9, xtol=1e-15)
    ground = min((s for s in solve_states(5.0) if s.parity is Parity.EVEN), key=lambda s: s.v)
    assert ground.v == pytest.approx(v0, abs=1e-12)
    assert ground.u == pytest.approx(math.sqrt(25 - v0 * v0), abs=1e-12)


def test_strength_five_layout():
    s = solve_states(5.0)
    assert len(s) == 6
    by_q = {(q, p): sum(1 for x in s if x.quadrant == q and x.parity is p) for q in (1, 2) for p in Parity}
    assert by_q == {(1, Parity.EVEN): 2, (1, Parity.ODD): 2, (2, Parity.EVEN): 1, (2, Parity.ODD): 1}
    assert not any(x.near_critical for x in s)


def test_strength_four_point_two():
    assert len(solve_states(4.2)) == 4


def test_small_well_has_one_even_state():
    (s,) = solve_states(0.5)
    assert s.parity is Parity.EVEN and s.quadrant == 1


def test_states_satisfy_both_equations():
    for R in (3.0, 6.5, 9.9):
        for s in solve_states(R):
            assert math.hypot(s.u, s.v) == pytest.approx(R, rel=1e-15)
            g = g_even if s.parity is Parity.EVEN else g_odd
            assert abs(g(R, s.theta)) <= 1e-10


def test_negative_u_filter_leaves_physical_states():
    for R in (2.0, 5.0, 8.8):
        s = solve_states(R, SolveOptions(include_negative_u=False))
        assert all(x.u >= 0 for x in s)
        assert len(s) == physical_state_count(R)


def test_lower_half_plane_mirrors():
    up = solve_states(5.0)
    both = solve_states(5.0, SolveOptions(include_lower_half_plane=True))
    assert len(both) == 2 * len(up)
    lower = [s for s in both if s.v < 0]
    assert sorted((s.u, -s.v) for s in lower) == sorted((s.u, s.v) for s in up)
    assert {s.quadrant for s in lower} == {3, 4}


def test_results_are_ordered():
    s = solve_states(9.0)
    keys = [(x.parity is not Parity.EVEN, x.v < 0, abs(x.v)) for x in s]
    assert keys == sorted(keys)


@settings(max_examples=60, deadline=None)
@given(R=st.floats(0.05, 14.0))
def test_physical_count_formula(R):
    # skip strengths where a state sits on u = 0 within rounding
    m = 2 * R / math.pi
    if abs(m - round(m)) < 1e-9:
        return
    n = sum(1 for s in solve_states(R) if s.u > 0)
    assert n == physical_state_count(R) == math.ceil(m)


def test_count_never_decreases_with_strength():
    counts = [len(solve_states(R)) for R in np.linspace(0.1, 12.0, 120)]
    assert all(b >= a for a, b in zip(counts, counts[1:]))


# -- two methods ----------------------------------------------------------------


@pytest.mark.parametrize("R", [0.7, 2.5, 4.2, 4.6034, 5.0, 6.2023953, 9.4, 11.2])
def test_z_plane_crossings_agree(R):
    a, b = solve_states(R), states_via_z_plane(R)
    assert len(a) == len(b)
    for x, y in zip(a, b):
        assert x.parity is y.parity
        assert abs(x.w - y.w) <= 1e-8


# -- near-critical ------------------------------------------------------------------


def test_published_near_critical_strength_flags_the_tangent_pair():
    s = solve_states(4.6034)
    flagged = [x for x in s if x.near_critical]
    assert len(flagged) == 2
    assert {x.parity for x in flagged} == {Parity.ODD}
    # the pair straddles the tangency on u = -1
    assert min(x.u for x in flagged) < -1 < max(x.u for x in flagged)


def test_near_critical_just_above_each_threshold():
    for c in critical_strengths(4):
        s = solve_states(c.R_c * (1 + 1e-9))
        flagged = [x for x in s if x.near_critical]
        assert len(flagged) == 2 and all(x.parity is c.parity for x in flagged)
        s = solve_states(c.R_c * (1 + 1e-3))
        assert not any(x.near_critical for x in s)


def test_gap_rule_without_proximity_window():
    c = critical_strengths(1)[0]
    opts = SolveOptions(near_critical_rtol=0.0)
    s = solve_states(c.R_c * (1 + 1e-14), opts)
    flagged = [x for x in s if x.near_critical]
    assert len(flagged) == 2
    assert abs(flagged[0].theta - flagged[1].theta) < 1e-6


# -- well parameters and energies ------------------------------------------------


def test_strength_from_params():
    p = WellParams(half_width_L=2.0, depth_V0=3.125)
    assert strength_from_params(p) == pytest.approx(5.0, rel=1e-15)
    p = WellParams(1.5, 2.0, mass_m=0.5, hbar=0.75)
    assert strength_from_params(p) == pytest.approx(1.5 / 0.75 * math.sqrt(2.0), rel=1e-15)


def test_energies_obey_inside_and_outside_relations():
    p = WellParams(2.0, 3.125, mass_m=1.0, hbar=1.0)
    R = strength_from_params(p)
    for s in solve_states(R, SolveOptions(include_negative_u=False)):
        E = energy_of_state(s, p)
        assert -p.depth_V0 < E < 0
        # kappa L = u and k L = v with E + V0 = hbar^2 k^2 / 2m
        assert E + p.depth_V0 == pytest.approx(s.v**2 / (2 * p.mass_m * p.half_width_L**2), rel=1e-12)


def test_energy_rejects_mismatched_well():
    s = solve_states(5.0)[0]
    with pytest.raises(ConsistencyError):
        energy_of_state(s, WellParams(1.0, 1.0))


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_well_params_validation(bad):
    with pytest.raises(ValueError):
        WellParams(bad, 1.0)
    with pytest.raises(ValueError):
        WellParams(1.0, 1.0, hbar=bad)


def test_strength_validation():
    with pytest.raises(ValueError):
        solve_states(0.0)
    with pytest.raises(ValueError):
        states_via_z_plane(-2.0)


# -- tolerance from the environment ------------------------------------------------


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("WELLLINES_TOL", "1e-6")
    assert SolveOptions().tolerance == 1e-6
    monkeypatch.setenv("WELLLINES_TOL", "1e-30")
    with pytest.raises(ConvergenceError):
        solve_states(5.0)


@pytest.mark.parametrize("raw", ["abc", "-1", "0"])
def test_tolerance_env_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv("WELLLINES_TOL", raw)
    with pytest.raises(ValueError):
        SolveOptions()
