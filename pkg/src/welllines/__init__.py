"""Finite square well bound states through the lines of the Lambert W function."""

from .critical import (
    CriticalStrength,
    critical_strengths,
    sensitivity_margin,
    spiral_crossing_ordinates,
    tangency_ordinate,
    tangency_residual,
)
from .errors import (
    ConsistencyError,
    ConvergenceError,
    LambertWDomainError,
    MapOverflowError,
    SingularInputError,
    WellLinesError,
)
from .fsw_solver import (
    BoundState,
    SolveOptions,
    WellParams,
    energy_of_state,
    physical_state_count,
    solve_states,
    states_via_z_plane,
    strength_from_params,
)
from .lambertw import branch_of, forward_map, lambert_w
from .sheets3d import SheetCurve, intersection_curves, project
from .wmap import (
    AxialRay,
    LambertLineSpec,
    LineKind,
    Parity,
    SampledCurve,
    asymptotes,
    image_of_circle,
    sample_lambert_line,
    v_axis_crossings,
)

__version__ = "0.1.0"

__all__ = [
    "AxialRay",
    "BoundState",
    "ConsistencyError",
    "ConvergenceError",
    "CriticalStrength",
    "LambertLineSpec",
    "LambertWDomainError",
    "LineKind",
    "MapOverflowError",
    "Parity",
    "SampledCurve",
    "SheetCurve",
    "SingularInputError",
    "SolveOptions",
    "WellLinesError",
    "WellParams",
    "asymptotes",
    "branch_of",
    "critical_strengths",
    "energy_of_state",
    "forward_map",
    "image_of_circle",
    "intersection_curves",
    "lambert_w",
    "physical_state_count",
    "project",
    "sample_lambert_line",
    "sensitivity_margin",
    "solve_states",
    "spiral_crossing_ordinates",
    "states_via_z_plane",
    "strength_from_params",
    "tangency_ordinate",
    "tangency_residual",
    "v_axis_crossings",
]
