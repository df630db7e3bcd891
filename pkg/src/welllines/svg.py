"""Minimal deterministic SVG plotting canvas."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np

BLUE = "#1f4fd1"
RED = "#d12a1f"
GREEN = "#1c9a3a"
GREY = "#888888"
BLACK = "#000000"

# stroke-dasharray per line role
SOLID = None
DASHED = "6,4"
DOTTED = "1,3"
DASH_DOT = "6,3,1,3"


def _f(x):
    return f"{x:.3f}"


@dataclass
class Canvas:
    """Plot in world coordinates (x right, y up) inside a fixed box."""

    xlim: tuple
    ylim: tuple
    width: int = 640
    height: int = 640
    margin: int = 40
    title: str = ""
    _items: list = field(default_factory=list)

    def _px(self, x, y):
        (x0, x1), (y0, y1) = self.xlim, self.ylim
        w = self.width - 2 * self.margin
        h = self.height - 2 * self.margin
        px = self.margin + (x - x0) / (x1 - x0) * w
        py = self.margin + (y1 - y) / (y1 - y0) * h
        return px, py

    def _inside(self, x, y):
        (x0, x1), (y0, y1) = self.xlim, self.ylim
        return x0 <= x <= x1 and y0 <= y <= y1

    def polyline(self, xs, ys, color=BLACK, dash=SOLID, width=1.5, opacity=1.0):
        """Draw a polyline, split wherever it leaves the plot box."""
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        run = []
        for x, y in zip(xs, ys):
            if math.isfinite(x) and math.isfinite(y) and self._inside(x, y):
                run.append(self._px(x, y))
            else:
                self._emit_run(run, color, dash, width, opacity)
                run = []
        self._emit_run(run, color, dash, width, opacity)

    def _emit_run(self, run, color, dash, width, opacity):
        if len(run) < 2:
            return
        pts = " ".join(f"{_f(px)},{_f(py)}" for px, py in run)
        style = f'fill="none" stroke="{color}" stroke-width="{width}"'
        if dash:
            style += f' stroke-dasharray="{dash}"'
        if opacity != 1.0:
            style += f' stroke-opacity="{opacity}"'
        self._items.append(f'<polyline points="{pts}" {style}/>')

    def hline(self, y, **kw):
        self.polyline(self.xlim, (y, y), **kw)

    def vline(self, x, **kw):
        self.polyline((x, x), self.ylim, **kw)

    def dot(self, x, y, color=BLACK, r=3.5):
        if not self._inside(x, y):
            return
        px, py = self._px(x, y)
        self._items.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="{r}" fill="{color}"/>')

    def text(self, x, y, s, size=11, anchor="start"):
        px, py = self._px(x, y)
        self._items.append(
            f'<text x="{_f(px)}" y="{_f(py)}" font-size="{size}" text-anchor="{anchor}">{escape(s)}</text>'
        )

    def axes(self, xlabel="", ylabel="", yticks=(), ytick_labels=None):
        (x0, x1), (y0, y1) = self.xlim, self.ylim
        if y0 <= 0 <= y1:
            self.hline(0.0, color=GREY, width=0.8)
        if x0 <= 0 <= x1:
            self.vline(0.0, color=GREY, width=0.8)
        labels = ytick_labels or [f"{t:g}" for t in yticks]
        for t, lab in zip(yticks, labels):
            if y0 <= t <= y1:
                px, py = self._px(0.0 if x0 <= 0 <= x1 else x0, t)
                self._items.append(
                    f'<line x1="{_f(px - 4)}" y1="{_f(py)}" x2="{_f(px + 4)}" y2="{_f(py)}" stroke="{GREY}"/>'
                )
                self._items.append(f'<text x="{_f(px + 6)}" y="{_f(py + 4)}" font-size="9">{escape(lab)}</text>')
        if xlabel:
            self.text(x1, y0, xlabel, anchor="end")
        if ylabel:
            self.text(x0, y1, ylabel)

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
            f'<rect x="0" y="0" width="{self.width}" height="{self.height}" fill="#ffffff"/>\n'
        )
        if self.title:
            head += (
                f'<text x="{self.width // 2}" y="20" font-size="13" text-anchor="middle">'
                f"{escape(self.title)}</text>\n"
            )
        return head + "\n".join(self._items) + "\n</svg>\n"
