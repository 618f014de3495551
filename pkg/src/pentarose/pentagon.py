"""The one-parameter convex pentagon family and its realization.

The pentagon has vertices labeled A, B, C, D, E counterclockwise, four
unit edges AB, BC, CD, EA and one distinguished edge DE whose length
depends on the free angle B.  The interior angles satisfy, exactly,

    A + B + C = 360,  C = 2D,  D + E = 180,

and the distinguished edge has length |DE| = 2*sin(B/2) for unit sides.
Reflecting the pentagon across the line DE yields an equilateral concave
octagon made of the two pentagons; that octagon is the basic building
block of all the patch constructions in :mod:`pentarose.builders`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .angles import ExactAngle, deg

Point = Tuple[float, float]

VERTEX_LABELS = ("A", "B", "C", "D", "E")
# Edge i runs from vertex i to vertex i+1 in label order.
EDGE_LABELS = ("AB", "BC", "CD", "DE", "EA")

CLOSURE_TOL = 1e-9


class DomainError(ValueError):
    """Parameter outside the family's domain."""


@dataclass(frozen=True)
class PentagonSpec:
    """Interior angles (exact) and edge lengths of a family pentagon."""

    A: ExactAngle
    B: ExactAngle
    C: ExactAngle
    D: ExactAngle
    E: ExactAngle
    e: float  # |DE| for unit sides

    def angle(self, label: str) -> ExactAngle:
        return getattr(self, label)

    def edge_length(self, edge: str) -> float:
        return self.e if edge == "DE" else 1.0

    def edge_is_unit(self, edge: str) -> bool:
        """Exact test: every edge but DE is unit; DE is unit iff B = 60."""
        return edge != "DE" or self.B == deg(60)

    def edges_match(self, e1: str, e2: str) -> bool:
        """Whether two edge labels may be glued (equal length, exactly)."""
        return self.edge_is_unit(e1) == self.edge_is_unit(e2)

    def edge_direction(self, edge: str) -> ExactAngle:
        """Exact heading of the directed edge in the base realization.

        The base realization walks A=(0,0) -> B=(1,0) -> ... so AB has
        heading 0 and each subsequent heading adds the exterior angle.
        These headings are rational in degrees for every rational B.
        """
        B = self.B
        if edge == "AB":
            return deg(0)
        if edge == "BC":
            return (deg(180) - B).mod360()
        if edge == "CD":
            return (deg(180) - B * 2 / 3).mod360()
        if edge == "DE":
            return (deg(270) - B / 2).mod360()
        if edge == "EA":
            return (deg(360) - B * 2 / 3).mod360()
        raise KeyError(edge)


def angles_from_B(B: ExactAngle) -> PentagonSpec:
    """Pentagon spec for a free angle B in (0, 180) degrees."""
    if not (deg(0) < B < deg(180)):
        raise DomainError(f"B must be in (0, 180) degrees, got {B!r}")
    A = deg(180) - B * 2 / 3
    C = deg(180) - B / 3
    D = deg(90) - B / 6
    E = deg(90) + B / 6
    e = 2.0 * math.sin((B / 2).radians)
    return PentagonSpec(A=A, B=B, C=C, D=D, E=E, e=e)


def spec_for_rotational(n: int) -> PentagonSpec:
    """Pentagon that admits an n-fold rotationally symmetric tiling (n >= 3)."""
    if n < 3:
        raise DomainError(f"rotational order must be >= 3, got {n}")
    return angles_from_B(deg(360, n))


def spec_for_hole(m: int) -> PentagonSpec:
    """Pentagon that surrounds a regular m-gon hole (m >= 7)."""
    if m < 7:
        raise DomainError(f"hole polygon must have >= 7 sides, got {m}")
    return angles_from_B(deg(1080, m))


@dataclass(frozen=True)
class PentagonGeom:
    """Realized coordinates: vertices A..E, counterclockwise."""

    spec: PentagonSpec
    vertices: Tuple[Point, Point, Point, Point, Point]

    def vertex(self, label: str) -> Point:
        return self.vertices[VERTEX_LABELS.index(label)]

    def edge(self, edge: str) -> Tuple[Point, Point]:
        i = EDGE_LABELS.index(edge)
        return self.vertices[i], self.vertices[(i + 1) % 5]

    @property
    def signed_area(self) -> float:
        return polygon_signed_area(self.vertices)


def polygon_signed_area(pts) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def realize(spec: PentagonSpec) -> PentagonGeom:
    """Walk the boundary from A=(0,0), B=(1,0) and close up.

    A closure residual above tolerance means the spec's angles and edge
    lengths are inconsistent, which cannot happen for specs produced by
    :func:`angles_from_B`; it is reported as an internal error.
    """
    lengths = [1.0, 1.0, 1.0, spec.e, 1.0]
    pts = [(0.0, 0.0)]
    for i, edge in enumerate(EDGE_LABELS):
        theta = spec.edge_direction(edge).radians
        x, y = pts[-1]
        pts.append((x + lengths[i] * math.cos(theta),
                    y + lengths[i] * math.sin(theta)))
    closure = math.hypot(pts[5][0], pts[5][1])
    if closure > CLOSURE_TOL:
        raise RuntimeError(
            f"pentagon boundary walk failed to close (residual {closure:g})")
    return PentagonGeom(spec=spec, vertices=tuple(pts[:5]))


def reflect_point_across_line(p: Point, a: Point, b: Point) -> Point:
    """Reflect p across the line through a and b."""
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    L2 = dx * dx + dy * dy
    px, py = p[0] - ax, p[1] - ay
    t = (px * dx + py * dy) / L2
    fx, fy = ax + t * dx, ay + t * dy  # foot of perpendicular
    return (2 * fx - p[0], 2 * fy - p[1])


@dataclass(frozen=True)
class OctaUnit:
    """A pentagon and its mirror image across edge DE.

    Together they bound an equilateral concave octagon with one reflex
    vertex (angle 2E > 180) and one on-axis convex vertex (angle 2D).
    """

    base: PentagonGeom
    mirror: PentagonGeom

    def boundary(self):
        """Octagon boundary, counterclockwise: A B C D C' B' A' E."""
        base = self.base.vertices
        mirr = self.mirror.vertices
        return (base[0], base[1], base[2], base[3],
                mirr[2], mirr[1], mirr[0], base[4])


def reflect_to_octa(geom: PentagonGeom) -> OctaUnit:
    d, e = geom.vertex("D"), geom.vertex("E")
    mirrored = tuple(reflect_point_across_line(p, d, e) for p in geom.vertices)
    return OctaUnit(base=geom, mirror=PentagonGeom(spec=geom.spec, vertices=mirrored))
