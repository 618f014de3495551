"""Tilings as lists of exact-rotation placements, plus edge gluing.

A :class:`Tiling` is a prototile spec and an ordered list of isometries.
New tiles are added by :func:`glue`, which places a pentagon so that a
named edge of it coincides with a named free edge of an existing tile.
All rotation bookkeeping is exact; only translations are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .angles import ExactAngle, deg
from .clip import bbox, bboxes_overlap, intersection_area
from .pentagon import (EDGE_LABELS, VERTEX_LABELS, PentagonGeom, PentagonSpec,
                       Point, realize)
from .transform import IDENTITY, Isometry

MERGE_TOL = 1e-7
OVERLAP_AREA_TOL = 1e-9


class GlueError(ValueError):
    """A gluing instruction that cannot be carried out."""


@dataclass(frozen=True)
class GlueStep:
    host_tile: int
    host_edge: str
    guest_edge: str
    guest_reflected: bool


class Tiling:
    """Immutable patch: a pentagon spec plus placements."""

    def __init__(self, spec: PentagonSpec,
                 placements: Sequence[Isometry] = (),
                 mode: str = "freeform",
                 params: Optional[Dict[str, int]] = None):
        self.spec = spec
        self.placements: Tuple[Isometry, ...] = tuple(placements)
        self.mode = mode
        self.params: Dict[str, int] = dict(params or {})
        self._base: PentagonGeom = realize(spec)
        self._verts: List[Optional[tuple]] = [None] * len(self.placements)

    @classmethod
    def seed(cls, spec: PentagonSpec, placement: Isometry = IDENTITY,
             mode: str = "freeform", params: Optional[Dict[str, int]] = None
             ) -> "Tiling":
        return cls(spec, (placement,), mode=mode, params=params)

    @property
    def count(self) -> int:
        return len(self.placements)

    @property
    def base_geometry(self) -> PentagonGeom:
        return self._base

    def with_tile(self, iso: Isometry) -> "Tiling":
        t = Tiling.__new__(Tiling)
        t.spec = self.spec
        t.placements = self.placements + (iso,)
        t.mode = self.mode
        t.params = self.params
        t._base = self._base
        t._verts = self._verts + [None]
        return t

    def with_mode(self, mode: str, params: Optional[Dict[str, int]] = None
                  ) -> "Tiling":
        t = Tiling.__new__(Tiling)
        t.spec = self.spec
        t.placements = self.placements
        t.mode = mode
        t.params = dict(params or {})
        t._base = self._base
        t._verts = self._verts
        return t

    def tile_vertices(self, i: int):
        """Placed vertex coordinates of tile i, in label order A..E."""
        v = self._verts[i]
        if v is None:
            v = self.placements[i].apply_all(self._base.vertices)
            self._verts[i] = v
        return v

    def tile_edge(self, i: int, edge: str) -> Tuple[Point, Point]:
        verts = self.tile_vertices(i)
        k = EDGE_LABELS.index(edge)
        return verts[k], verts[(k + 1) % 5]

    def tile_edge_direction(self, i: int, edge: str) -> ExactAngle:
        return self.placements[i].direction(self.spec.edge_direction(edge))

    def edge_sharers(self, i: int, edge: str) -> List[Tuple[int, str]]:
        """Tiles (other than i) whose edge coincides with edge of tile i."""
        p, q = self.tile_edge(i, edge)
        out = []
        for j in range(self.count):
            if j == i:
                continue
            verts = self.tile_vertices(j)
            for k, lab in enumerate(EDGE_LABELS):
                r, s = verts[k], verts[(k + 1) % 5]
                if ((_close(p, r) and _close(q, s))
                        or (_close(p, s) and _close(q, r))):
                    out.append((j, lab))
        return out

    def angles_at(self, point: Point, extra=()) -> List[Tuple[int, str]]:
        """(tile, vertex label) records whose placed vertex is at point."""
        out = []
        for i in range(self.count):
            verts = self.tile_vertices(i)
            for k, lab in enumerate(VERTEX_LABELS):
                if _close(verts[k], point):
                    out.append((i, lab))
        out.extend(extra)
        return out


def _close(p: Point, q: Point, tol: float = MERGE_TOL) -> bool:
    return abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol


def placement_for(t: Tiling, step: GlueStep) -> Isometry:
    """Isometry placing a new pentagon per the gluing instruction."""
    if not (0 <= step.host_tile < t.count):
        raise GlueError(f"host tile {step.host_tile} does not exist")
    if step.host_edge not in EDGE_LABELS or step.guest_edge not in EDGE_LABELS:
        raise GlueError("unknown edge label")
    spec = t.spec
    if not spec.edges_match(step.host_edge, step.guest_edge):
        raise GlueError(
            f"edge length mismatch: {step.host_edge} vs {step.guest_edge}")
    host = t.placements[step.host_tile]
    phi_h = t.tile_edge_direction(step.host_tile, step.host_edge)
    p, q = t.tile_edge(step.host_tile, step.host_edge)
    if step.guest_reflected == host.reflected:
        phi_g = (phi_h + deg(180)).mod360()
        target = q
    else:
        phi_g = phi_h
        target = p
    sign = -1 if step.guest_reflected else 1
    theta = (phi_g - sign * spec.edge_direction(step.guest_edge)).mod360()
    v0 = t.base_geometry.vertices[EDGE_LABELS.index(step.guest_edge)]
    x, y = v0
    if step.guest_reflected:
        y = -y
    c, s = theta.cos(), theta.sin()
    return Isometry(rotation=theta,
                    tx=target[0] - (c * x - s * y),
                    ty=target[1] - (s * x + c * y),
                    reflected=step.guest_reflected)


def glue(t: Tiling, step: GlueStep) -> Tiling:
    """Append one pentagon so the named edges coincide endpoint-to-endpoint."""
    if not (0 <= step.host_tile < t.count):
        raise GlueError(f"host tile {step.host_tile} does not exist")
    if step.host_edge not in EDGE_LABELS:
        raise GlueError(f"unknown edge label {step.host_edge!r}")
    if t.edge_sharers(step.host_tile, step.host_edge):
        raise GlueError(
            f"edge {step.host_edge} of tile {step.host_tile} is already shared")
    return t.with_tile(placement_for(t, step))


def _completable(t: Tiling, new_verts, new_iso: Isometry) -> bool:
    """Every vertex touched by the new tile keeps an exact sum <= 360."""
    spec = t.spec
    for k, lab in enumerate(VERTEX_LABELS):
        total = spec.angle(lab).degrees
        for rec_tile, rec_lab in t.angles_at(new_verts[k]):
            total += spec.angle(rec_lab).degrees
        if total > 360:
            return False
    return True


def extend_search(t: Tiling, frontier_edge: Tuple[int, str],
                  max_solutions: int = 16) -> List[GlueStep]:
    """All gluings at a free boundary edge that stay locally consistent.

    A candidate is kept when the new tile overlaps nothing and every
    affected vertex still has an exact angle sum of at most 360 degrees.
    Results are ordered by guest edge label, then by reflection flag.
    """
    host_tile, host_edge = frontier_edge
    if t.edge_sharers(host_tile, host_edge):
        raise GlueError(
            f"edge {host_edge} of tile {host_tile} is not free")
    existing_boxes = [bbox(t.tile_vertices(i)) for i in range(t.count)]
    out: List[GlueStep] = []
    for guest_edge in EDGE_LABELS:
        if not t.spec.edges_match(host_edge, guest_edge):
            continue
        for refl in (False, True):
            step = GlueStep(host_tile, guest_edge=guest_edge,
                            host_edge=host_edge, guest_reflected=refl)
            iso = placement_for(t, step)
            verts = iso.apply_all(t.base_geometry.vertices)
            nb = bbox(verts)
            overlap = False
            for i in range(t.count):
                if not bboxes_overlap(existing_boxes[i], nb):
                    continue
                if intersection_area(t.tile_vertices(i), verts) > OVERLAP_AREA_TOL:
                    overlap = True
                    break
            if overlap:
                continue
            if not _completable(t, verts, iso):
                continue
            out.append(step)
            if len(out) >= max_solutions:
                return out
    return out
