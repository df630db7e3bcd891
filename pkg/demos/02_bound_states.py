"""
Finite square well states as circle crossings
=============================================

A well of half width L and depth V0 has strength R = (L / hbar) sqrt(2 m V0).
Its states are where the circle |w| = R crosses a Lambert line.
"""

from welllines import (
    SolveOptions,
    WellParams,
    energy_of_state,
    physical_state_count,
    solve_states,
    states_via_z_plane,
    strength_from_params,
)

###############################################################################
# A well with R = 5.
well = WellParams(half_width_L=2.0, depth_V0=3.125)
R = strength_from_params(well)
print("R =", R)

states = solve_states(R)
for s in states:
    print(f"{s.parity.value:4s} Q{s.quadrant}  u={s.u:+.6f}  v={s.v:.6f}")

###############################################################################
# Only u > 0 crossings decay outside the well.  Their count follows
# floor(2R/pi) + 1.
physical = solve_states(R, SolveOptions(include_negative_u=False))
print(len(physical), "physical states; formula gives", physical_state_count(R))
for s in physical:
    print(f"{s.parity.value:4s} E = {energy_of_state(s, well):.6f}")

###############################################################################
# The same states from the z-plane: the image of the circle crosses the
# imaginary axis at even states and the real axis at odd ones.
z_states = states_via_z_plane(R)
print("max |dw| between methods:", max(abs(a.w - b.w) for a, b in zip(states, z_states)))

###############################################################################
# Near a critical strength two states of one parity almost coincide.
for R in (4.2, 4.6034, 5.0):
    s = solve_states(R)
    print(R, len(s), "states,", sum(x.near_critical for x in s), "flagged near-critical")
