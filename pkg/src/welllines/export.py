"""Tables, figure data and file emitters (CSV, JSON, SVG).

Every command produces a :class:`Table` with a fixed column set.  Figures
bundle one or more tables with metadata and an SVG renderer.  Output is
byte-deterministic: rows are generated in a fixed order, floats are written
with ``repr`` and JSON keys are sorted.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import svg
from .critical import critical_strengths, spiral_samples, tangency_ordinate
from .fsw_solver import SolveOptions, WellParams, energy_of_state, solve_states
from .lambertw import BRANCH_POINT, forward_map, lambert_w
from .sheets3d import DEFAULT_R_MAX, intersection_curves
from .wmap import (
    AxialRay,
    LambertLineSpec,
    LineKind,
    Parity,
    image_of_circle,
    line_asymptotes,
    sample_lambert_line,
    v_axis_crossings,
)

__all__ = [
    "Table",
    "FigureData",
    "LINES_COLUMNS",
    "SOLVE_COLUMNS",
    "CRITICAL_COLUMNS",
    "SHEETS_COLUMNS",
    "SPIRAL_COLUMNS",
    "lines_table",
    "solve_table",
    "critical_table",
    "spiral_table",
    "sheets_table",
    "to_csv",
    "to_json",
    "emit_table1",
    "table1_json",
    "parse_table1",
    "table1_record",
    "figure",
    "FIGURE_IDS",
    "render_svg",
]

LINES_COLUMNS = ("branch", "ray", "parity", "t", "u", "v")
SOLVE_COLUMNS = ("parity", "quadrant", "u", "v", "R", "near_critical")
CRITICAL_COLUMNS = ("n", "parity", "v_t", "R_c", "z_re", "z_im", "ray")
SHEETS_COLUMNS = ("curve_id", "u", "v", "R")
SPIRAL_COLUMNS = ("v", "x", "y", "modulus")
CURVE_COLUMNS = ("theta", "x", "y")
REAL_W_COLUMNS = ("branch", "x", "u")

FIGURE_BRANCHES = (-2, -1, 0, 1, 2)
FIGURE_T_RANGE = (1e-8, 1e5)
W_WINDOW = ((-10.0, 10.0), (-10.0, 10.0))
OVERLAY_SHIFT = 0.3
FIG7_VIEWPORTS = (1, 16, 160, 1600)
FIG8_STRENGTHS = (5.0, 4.2, 4.6034)
FIG10_COUNT = 19


@dataclass
class Table:
    name: str
    columns: tuple
    rows: list
    meta: dict = field(default_factory=dict)
    draw: Callable | None = None  # (Table) -> svg text
    data: dict = field(default_factory=dict, repr=False)  # objects behind the rows


def _cell(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    if x is None:
        return ""
    return str(x)


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if hasattr(x, "value") and not isinstance(x, (int, float, str)):
        return x.value
    return x


def _dumps(doc) -> str:
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2, allow_nan=False) + "\n"


def to_json(table: Table, extra: dict | None = None) -> str:
    doc = {
        "name": table.name,
        "columns": list(table.columns),
        "rows": [dict(zip(table.columns, r)) for r in table.rows],
        "meta": table.meta,
    }
    if extra:
        doc.update(extra)
    return _dumps(doc)


# ---------------------------------------------------------------- tables


def _all_specs(branches, rays=tuple(AxialRay)):
    return [LambertLineSpec(k, r) for k in branches for r in rays]


def _line_meta(spec, v_max):
    return {
        "line": str(spec),
        "branch": spec.branch,
        "ray": spec.ray.value,
        "parity": spec.kind.value,
        "v_axis_crossings": v_axis_crossings(spec, v_max),
        "asymptotes": line_asymptotes(spec),
    }


def lines_table(
    branches=FIGURE_BRANCHES,
    rays=tuple(AxialRay),
    t_min: float = 1e-8,
    t_max: float = 1e3,
    n: int = 512,
    spacing: str = "log",
    v_max: float = 10.0,
) -> Table:
    """Sampled Lambert lines, one block of rows per (branch, ray)."""
    rows, curves = [], []
    for spec in _all_specs(branches, rays):
        c = sample_lambert_line(spec, t_min, t_max, n, spacing)
        curves.append(c)
        for t, w in zip(c.params, c.points):
            rows.append((spec.branch, spec.ray.value, spec.kind.value, float(t), float(w.real), float(w.imag)))
    meta = {
        "t_range": [t_min, t_max],
        "samples": n,
        "spacing": spacing,
        "branches": list(branches),
        "lines": [_line_meta(c.spec, v_max) for c in curves],
    }
    t = Table("lines", LINES_COLUMNS, rows, meta)
    t.data["curves"] = curves
    t.draw = lambda tab: _draw_wplane(tab.data["curves"], title="Lambert lines")
    return t


def solve_table(
    R: float | list,
    opts: SolveOptions | None = None,
    params: WellParams | None = None,
) -> Table:
    """Bound states for one or more strengths.  Adds an energy column when
    well parameters are given."""
    strengths = [R] if isinstance(R, (int, float)) else list(R)
    columns = SOLVE_COLUMNS + (("energy",) if params is not None else ())
    rows, states = [], []
    for r in strengths:
        for s in solve_states(r, opts):
            row = (s.parity.value, s.quadrant, s.u, s.v, s.R, s.near_critical)
            if params is not None:
                row += (energy_of_state(s, params),)
            rows.append(row)
            states.append(s)
    opts = opts or SolveOptions()
    meta = {
        "strengths": strengths,
        "include_negative_u": opts.include_negative_u,
        "include_lower_half_plane": opts.include_lower_half_plane,
        "tolerance": opts.tolerance,
    }
    if params is not None:
        meta["well"] = {"L": params.half_width_L, "V0": params.depth_V0, "mass": params.mass_m, "hbar": params.hbar}
    t = Table("solve", columns, rows, meta)
    t.data["states"] = states
    t.draw = lambda tab: _draw_states(tab, strengths)
    return t


def critical_table(count: int) -> Table:
    crits = critical_strengths(count)
    rows = [
        (c.index_n, c.parity.value, c.v_t, c.R_c, c.z_image.real, c.z_image.imag, c.ray.value) for c in crits
    ]
    meta = {"count": count, "lines": [str(c.line) for c in crits]}
    t = Table("critical", CRITICAL_COLUMNS, rows, meta)
    t.data["crits"] = crits
    t.draw = lambda tab: _draw_spiral(_spiral_rows(tab.data["crits"][-1].v_t + math.pi / 4, 2001), tab.data["crits"])
    return t


def _spiral_rows(v_max, n):
    z = spiral_samples(0.0, v_max, n)
    v = np.linspace(0.0, v_max, n)
    return [(float(a), float(b.real), float(b.imag), float(abs(b))) for a, b in zip(v, z)]


def spiral_table(count: int = FIG10_COUNT, n: int = 2001) -> Table:
    """Image of u = -1, v >= 0 up to a quarter turn past the count-th tangency."""
    v_max = tangency_ordinate(count) + math.pi / 4
    crits = critical_strengths(count)
    meta = {"v_max": v_max, "critical": [[c.index_n, c.v_t, c.z_image.real, c.z_image.imag] for c in crits]}
    t = Table("spiral", SPIRAL_COLUMNS, _spiral_rows(v_max, n), meta)
    t.data["crits"] = crits
    t.draw = lambda tab: _draw_spiral(tab.rows, tab.data["crits"])
    return t


def sheets_table(R_max: float = DEFAULT_R_MAX, n: int = 401, view: str = "d") -> Table:
    curves = intersection_curves(R_max, n)
    rows = []
    for i, c in enumerate(curves, start=1):
        rows.extend((i, float(u), float(v), float(r)) for u, v, r in c.points)
    meta = {
        "R_max": R_max,
        "v_max": math.sqrt(R_max**2 - 1.0) if R_max > 1 else 0.0,
        "sheet_selection": (
            "one sheet per band of v > 0 between consecutive asymptotes whose "
            "lowest point has R <= R_max; the imaginary line through the origin "
            "and the real lines ending at (-1, 0) are excluded"
        ),
        "curves": [
            {"curve_id": i, "line": str(c.spec), "parity": c.spec.kind.value, "minimum": list(c.minimum())}
            for i, c in enumerate(curves, start=1)
        ],
    }
    t = Table("sheets", SHEETS_COLUMNS, rows, meta)
    t.data["curves"] = curves
    t.draw = lambda tab: _draw_sheets(tab.data["curves"], view, R_max)
    return t


# ---------------------------------------------------------------- table 1


_TABLE1 = (
    ("equation", "Equation in w-plane where w = u + iv", LineKind.IMAGINARY.equation, LineKind.REAL.equation),
    ("ordinate_crossings", "Intersects ordinate at v = pi/2 times an", "EVEN", "ODD"),
    ("asymptotes", "Asymptotes cross ordinate at v = pi/2 times an", "ODD", "EVEN"),
    ("style", "Shown in figures as", "BLUE SOLID", "RED DASHED"),
    (
        "axial_ray",
        "Axial ray in z-plane where z = x + iy",
        [AxialRay.POS_IMAG.value, AxialRay.NEG_IMAG.value],
        [AxialRay.POS_REAL.value, AxialRay.NEG_REAL.value],
    ),
    ("wavefunction_parity", "FSW bound state wavefunctions are", Parity.EVEN.value.upper(), Parity.ODD.value.upper()),
)


def emit_table1() -> dict:
    """The Lambert line property table as a structured document."""
    return {
        "title": "Lambert Line Properties and Notation",
        "types": [LineKind.IMAGINARY.value, LineKind.REAL.value],
        "rows": [
            {"key": key, "label": label, LineKind.IMAGINARY.value: im, LineKind.REAL.value: re}
            for key, label, im, re in _TABLE1
        ],
    }


def table1_json(doc: dict | None = None) -> str:
    return _dumps(emit_table1() if doc is None else doc)


def parse_table1(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "rows" not in doc or len(doc["rows"]) != 6:
        raise ValueError("not a six-row line property table")
    return doc


def table1_record(kind: LineKind, doc: dict | None = None) -> dict:
    """key -> value for one column of the table."""
    doc = doc or emit_table1()
    return {r["key"]: r[kind.value] for r in doc["rows"]}


def table1_csv() -> str:
    doc = emit_table1()
    rows = []
    for r in doc["rows"]:
        cells = [r[t] for t in doc["types"]]
        rows.append((r["key"], r["label"], *("|".join(c) if isinstance(c, list) else c for c in cells)))
    return to_csv(Table("table1", ("key", "label", *doc["types"]), rows))


# ---------------------------------------------------------------- drawing


def _line_style(kind):
    if kind is LineKind.IMAGINARY:
        return {"color": svg.BLUE, "dash": svg.SOLID}
    return {"color": svg.RED, "dash": svg.DASHED}


def _state_color(parity):
    return svg.BLUE if parity is Parity.EVEN else svg.RED


def _half_pi_ticks(lo, hi):
    m0, m1 = math.ceil(lo / (math.pi / 2)), math.floor(hi / (math.pi / 2))
    ticks = [m * math.pi / 2 for m in range(m0, m1 + 1) if m != 0]
    labels = [f"{m}pi/2" for m in range(m0, m1 + 1) if m != 0]
    return ticks, labels


def _wplane_canvas(title, ticks=False):
    c = svg.Canvas(*W_WINDOW, title=title)
    if ticks:
        t, lab = _half_pi_ticks(*W_WINDOW[1])
        c.axes("u", "v", yticks=t, ytick_labels=lab)
    else:
        c.axes("u", "v")
    return c


def _plot_lines(c, curves, shift=0.0, **style):
    for curve in curves:
        st = style or _line_style(curve.spec.kind)
        for seg in curve.segments():
            c.polyline(seg.real, seg.imag + shift, **st)


def _plot_asymptotes(c):
    lo, hi = W_WINDOW[1]
    for m in range(math.ceil(lo / (math.pi / 2)), math.floor(hi / (math.pi / 2)) + 1):
        if m == 0:
            continue  # the u axis is drawn already
        if m % 2:
            c.hline(m * math.pi / 2, color=svg.BLUE, dash=svg.DOTTED, width=1.0)
        else:
            c.hline(m * math.pi / 2, color=svg.RED, dash=svg.DASH_DOT, width=1.0)


def _plot_circle(c, R, dash=svg.SOLID):
    th = np.linspace(0.0, 2 * math.pi, 721)
    c.polyline(R * np.cos(th), R * np.sin(th), color=svg.BLACK, dash=dash, width=1.2)


def _plot_states(c, states):
    for s in states:
        c.dot(s.u, s.v, color=_state_color(s.parity))


def _draw_wplane(curves, title, ticks=False, asymptotes=False, overlays=False):
    c = _wplane_canvas(title, ticks)
    if asymptotes:
        _plot_asymptotes(c)
    _plot_lines(c, curves)
    if overlays:
        _plot_overlays(c)
    return c.render()


def _plot_overlays(c):
    t_min, t_max = FIGURE_T_RANGE
    up = [sample_lambert_line(LambertLineSpec(0, r), t_min, t_max) for r in (AxialRay.POS_REAL, AxialRay.NEG_REAL)]
    down = [sample_lambert_line(LambertLineSpec(-1, AxialRay.NEG_REAL), t_min, t_max)]
    _plot_lines(c, up, OVERLAY_SHIFT, color=svg.GREEN, dash=svg.SOLID, width=2.0)
    _plot_lines(c, down, -OVERLAY_SHIFT, color=svg.GREEN, dash=svg.DASHED, width=2.0)


def _figure_curves():
    return [sample_lambert_line(s, *FIGURE_T_RANGE) for s in _all_specs(FIGURE_BRANCHES)]


def _draw_states(tab, strengths, curves=None, title=None, dashes=None):
    c = _wplane_canvas(title or "Strength circle R = " + ", ".join(f"{r:g}" for r in strengths))
    _plot_lines(c, curves if curves is not None else _figure_curves())
    for i, r in enumerate(strengths):
        _plot_circle(c, r, (dashes or {}).get(i, svg.SOLID))
    _plot_states(c, tab.data["states"])
    return c.render()


def _draw_spiral(rows, crits, half_width=None):
    arr = np.array([(r[1], r[2]) for r in rows])
    hw = half_width or 1.05 * float(np.max(np.abs(arr)))
    c = svg.Canvas((-hw, hw), (-hw, hw), title="Image of u = -1, v > 0")
    c.axes("x", "y")
    c.polyline(arr[:, 0], arr[:, 1], color=svg.BLACK, width=1.2)
    for cr in crits:
        c.dot(cr.z_image.real, cr.z_image.imag, color=_state_color(cr.parity))
    return c.render()


def _oblique(u, v, R):
    a = math.radians(35.0)
    return u + 0.55 * v * math.cos(a), R + 0.55 * v * math.sin(a)


def _draw_sheets(curves, view, R_max):
    styles = [_line_style(cv.spec.kind) for cv in curves]
    if view == "a":  # along v
        c = svg.Canvas((-10.0, 10.0), (0.0, R_max * 1.05), title="Projected along v")
        c.axes("u", "R")
        c.vline(-1.0, color=svg.GREY, dash=svg.DOTTED)
        pts = [(cv.u, cv.R) for cv in curves]
    elif view == "b":  # along u
        c = svg.Canvas((0.0, 10.0), (0.0, R_max * 1.05), title="Projected along u")
        c.axes("v", "R")
        pts = [(cv.v, cv.R) for cv in curves]
    elif view == "c":  # along R
        c = svg.Canvas((-10.0, 10.0), (0.0, 10.0), title="Projected along R")
        c.axes("u", "v")
        c.vline(-1.0, color=svg.GREY, dash=svg.DOTTED)
        pts = [(cv.u, cv.v) for cv in curves]
    else:
        c = svg.Canvas((-10.0, 14.0), (0.0, 14.0), title="Sheet and cone intersections")
        for end, label in (((-9.0, 0, 0), ""), ((9.0, 0, 0), "u"), ((0, 10.0, 0), "v"), ((0, 0, R_max), "R")):
            x, y = _oblique(*end)
            x0, y0 = _oblique(0.0, 0.0, 0.0)
            c.polyline((x0, x), (y0, y), color=svg.GREY, width=0.8)
            if label:
                c.text(x, y, label)
        pts = []
        for cv in curves:
            xy = [_oblique(u, v, r) for u, v, r in cv.points]
            pts.append((np.array([p[0] for p in xy]), np.array([p[1] for p in xy])))
    for (x, y), st, cv in zip(pts, styles, curves):
        c.polyline(x, y, **st)
        u, v, r = cv.minimum()
        mx, my = {"a": (u, r), "b": (v, r), "c": (u, v)}.get(view, _oblique(u, v, r))
        c.dot(mx, my, color=st["color"], r=3.0)
    return c.render()


# ---------------------------------------------------------------- figures


@dataclass
class FigureData:
    fig_id: str
    title: str
    table: Table  # the CSV payload
    extra: dict  # further tables and metadata for JSON
    draw: Callable  # () -> svg text


def _fig_lines(fig_id):
    tab = lines_table(FIGURE_BRANCHES, t_min=FIGURE_T_RANGE[0], t_max=FIGURE_T_RANGE[1])
    titles = {
        "1": "Lambert lines in the w-plane",
        "2": "Lambert line intersections of the v axis",
        "3": "Lambert line asymptotes",
        "5": "Branch 0 and -1 real Lambert lines",
    }
    flags = {
        "1": {},
        "2": {"ticks": True},
        "3": {"ticks": True, "asymptotes": True},
        "5": {"ticks": True, "asymptotes": True, "overlays": True},
    }[fig_id]
    extra = {}
    if fig_id == "5":
        extra["overlay_shift"] = {"W(0, PosReal)": OVERLAY_SHIFT, "W(0, NegReal)": OVERLAY_SHIFT, "W(-1, NegReal)": -OVERLAY_SHIFT}
    return FigureData(fig_id, titles[fig_id], tab, extra, lambda: _draw_wplane(tab.data["curves"], titles[fig_id], **flags))


def _fig4():
    rows = []
    # W_0 for x >= -1/e, W_-1 for -1/e <= x < 0, both starting at the corner
    s0 = np.concatenate([[0.0], np.geomspace(1e-10, 10.0 - BRANCH_POINT, 400)])
    for s in s0:
        x = BRANCH_POINT + float(s)
        rows.append((0, x, lambert_w(0, x).real))
    s1 = np.concatenate([[0.0], np.geomspace(1e-10, -BRANCH_POINT - 1e-6, 400)])
    for s in s1:
        x = BRANCH_POINT + float(s)
        rows.append((-1, x, lambert_w(-1, x).real))
    tab = Table("real_w", REAL_W_COLUMNS, rows, {"domain": {"0": [BRANCH_POINT, None], "-1": [BRANCH_POINT, 0.0]}})

    def draw():
        c = svg.Canvas((-1.0, 5.0), (-5.0, 2.0), title="Real W of real argument")
        c.axes("x", "u")
        for k, dash in ((0, svg.SOLID), (-1, svg.DASHED)):
            xs = [r[1] for r in rows if r[0] == k]
            us = [r[2] for r in rows if r[0] == k]
            c.polyline(xs, us, color=svg.GREEN, dash=dash, width=2.0)
        return c.render()

    return FigureData("4", "Real W of real argument", tab, {}, draw)


def _fig6():
    tab = solve_table(5.0)
    return FigureData("6", "Lambert lines and strength R = 5 circle", tab, {}, lambda: _draw_states(tab, [5.0]))


def _fig7(sub):
    R = 5.0
    theta, z = image_of_circle(R, 8001)
    tab = Table(
        "circle_image",
        CURVE_COLUMNS,
        [(float(t), float(w.real), float(w.imag)) for t, w in zip(theta, z)],
        {"R": R},
    )
    states = solve_states(R)
    extent = 1.05 * float(np.max(np.abs(np.concatenate([z.real, z.imag]))))
    viewports = [
        {"id": f"7{chr(ord('a') + i)}", "magnification": m, "x": [-extent / m, extent / m], "y": [-extent / m, extent / m]}
        for i, m in enumerate(FIG7_VIEWPORTS)
    ]
    dots = [
        {"parity": s.parity.value, "x": forward_map(s.w).real, "y": forward_map(s.w).imag} for s in states
    ]
    vp = next(v for v in viewports if v["id"] == (sub or "7a"))

    def draw():
        c = svg.Canvas(tuple(vp["x"]), tuple(vp["y"]), title=f"z-plane image of R = 5 circle ({vp['magnification']}x)")
        c.axes("x", "y")
        c.polyline(z.real, z.imag, color=svg.BLACK, width=1.2)
        for s in states:
            zz = forward_map(s.w)
            c.dot(zz.real, zz.imag, color=_state_color(s.parity))
        return c.render()

    extra = {"viewports": viewports, "states": dots}
    return FigureData(sub or "7", "z-plane image of strength R = 5 circle", tab, extra, draw)


def _fig8():
    tab = solve_table(list(FIG8_STRENGTHS))
    dashes = {0: svg.SOLID, 1: svg.DASHED, 2: svg.DOTTED}
    return FigureData(
        "8",
        "Lambert lines and three strengths",
        tab,
        {},
        lambda: _draw_states(tab, list(FIG8_STRENGTHS), dashes=dashes),
    )


def _fig9(sub):
    crits = critical_strengths(4)
    pick = crits if sub is None else [crits[ord(sub[-1]) - ord("a")]]
    tab = critical_table(4)
    tab.rows = [r for r, c in zip(tab.rows, crits) if c in pick]
    solved = {c.index_n: solve_states(c.R_c) for c in pick}
    extra = {
        "states_at_critical": {
            str(n): [[s.parity.value, s.u, s.v, s.near_critical] for s in st] for n, st in solved.items()
        }
    }

    def draw():
        c = _wplane_canvas("Tangency at critical strength " + ", ".join(f"{p.R_c:.4f}" for p in pick))
        c.vline(-1.0, color=svg.GREY, dash=svg.DOTTED)
        _plot_lines(c, _figure_curves())
        for p in pick:
            _plot_circle(c, p.R_c)
            c.dot(-1.0, p.v_t, color=_state_color(p.parity), r=4.5)
        return c.render()

    return FigureData(sub or "9", "Tangencies of the strength circle", tab, extra, draw)


def _fig10():
    tab = spiral_table(FIG10_COUNT)
    crit = critical_table(FIG10_COUNT)
    extra = {"critical_rows": [dict(zip(crit.columns, r)) for r in crit.rows]}
    return FigureData("10", "Image of u = -1, v > 0", tab, extra, lambda: tab.draw(tab))


def _fig11(sub):
    view = (sub or "11d")[-1]
    tab = sheets_table(DEFAULT_R_MAX, view=view)
    return FigureData(sub or "11", "Sheet and cone intersections", tab, {"view": view}, lambda: tab.draw(tab))


FIGURE_IDS = (
    ("1", "2", "3", "4", "5", "6", "7", "7a", "7b", "7c", "7d", "8")
    + ("9", "9a", "9b", "9c", "9d", "10", "11", "11a", "11b", "11c", "11d")
)


def figure(fig_id: str) -> FigureData:
    """Data behind one figure; raises KeyError for an unknown id."""
    fig_id = str(fig_id).strip().lower()
    if fig_id not in FIGURE_IDS:
        raise KeyError(fig_id)
    base = fig_id.rstrip("abcd")
    sub = fig_id if fig_id != base else None
    if base in ("1", "2", "3", "5"):
        return _fig_lines(base)
    if base == "4":
        return _fig4()
    if base == "6":
        return _fig6()
    if base == "7":
        return _fig7(sub)
    if base == "8":
        return _fig8()
    if base == "9":
        return _fig9(sub)
    if base == "10":
        return _fig10()
    return _fig11(sub)


def render_svg(table: Table) -> str:
    if table.draw is None:
        raise ValueError(f"no SVG rendering for {table.name}")
    return table.draw(table)
