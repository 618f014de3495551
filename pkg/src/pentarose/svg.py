"""Deterministic SVG rendering of tilings.

One closed path per pentagon, reflected tiles in a second fill color,
fixed numeric precision and stable ordering so identical inputs give
byte-identical files.  Scale: 100 SVG units per edge length, y flipped
to screen convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .tiling import Tiling

SCALE = 100.0
MARGIN = 50.0


@dataclass(frozen=True)
class RenderStyle:
    fill: str = "#7fb2d9"
    fill_reflected: str = "#e8c27a"
    stroke: str = "#1a1a2e"
    stroke_width: float = 1.5
    hole_outline: Optional[str] = "#c0392b"  # None disables the overlay


def _fmt(x: float) -> str:
    # fixed precision, normalized zero so -0.0000 never appears
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_svg(t: Tiling, style: RenderStyle = RenderStyle(),
               hole_polygon: Optional[Sequence] = None) -> str:
    """Render a tiling to an SVG 1.1 document string."""
    polys = [t.tile_vertices(i) for i in range(t.count)]
    xs = [p[0] for poly in polys for p in poly] or [0.0]
    ys = [p[1] for poly in polys for p in poly] or [0.0]
    x0, x1 = min(xs) * SCALE - MARGIN, max(xs) * SCALE + MARGIN
    y0, y1 = min(ys) * SCALE - MARGIN, max(ys) * SCALE + MARGIN
    w, h = x1 - x0, y1 - y0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w)}" height="{_fmt(h)}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}">',
    ]
    for i, poly in enumerate(polys):
        fill = style.fill_reflected if t.placements[i].reflected else style.fill
        d = "M " + " L ".join(f"{_fmt(p[0] * SCALE)},{_fmt(-p[1] * SCALE)}"
                              for p in poly) + " Z"
        lines.append(f'<path d="{d}" fill="{fill}" stroke="{style.stroke}" '
                     f'stroke-width="{_fmt(style.stroke_width)}"/>')
    if hole_polygon is not None and style.hole_outline is not None:
        pts = " ".join(f"{_fmt(p[0] * SCALE)},{_fmt(-p[1] * SCALE)}"
                       for p in hole_polygon)
        lines.append(f'<polygon points="{pts}" fill="none" '
                     f'stroke="{style.hole_outline}" '
                     f'stroke-width="{_fmt(style.stroke_width * 2)}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
