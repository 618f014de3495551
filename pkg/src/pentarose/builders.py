"""Patch builders: strips, wedges, rotational and hole patches, row
tilings, and two-fold spiral patches.

Constructions that the source material gives only pictorially are
encoded here as fixed gluing scripts.  Each script was derived once
with :func:`pentarose.tiling.extend_search` and then frozen; the test
suite re-validates every construction from scratch, so a script edit
that breaks a concentration or introduces an overlap is caught
immediately.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .angles import ExactAngle, deg
from .clip import bbox, bboxes_overlap, intersection_area
from .incidence import build_incidence
from .pentagon import DomainError, PentagonSpec, spec_for_hole, spec_for_rotational
from .tiling import (GlueStep, GlueError, OVERLAP_AREA_TOL, Tiling, extend_search,
                     glue, placement_for)
from .transform import IDENTITY, Isometry, compose, inverse, rotation_about

Vec = Tuple[float, float]


@dataclass(frozen=True)
class WedgeParams:
    """Size of one wedge-shaped fundamental domain, in unit rows."""

    depth: int = 1

    def __post_init__(self):
        if self.depth < 1:
            raise DomainError(f"wedge depth must be >= 1, got {self.depth}")

    @property
    def pentagons(self) -> int:
        """Pentagons per wedge: two per unit, rows of 1..depth units."""
        return self.depth * (self.depth + 1)


def _depth_of(p) -> int:
    return p.depth if isinstance(p, WedgeParams) else int(p)


def _translate(iso: Isometry, d: Vec) -> Isometry:
    return Isometry(iso.rotation, iso.tx + d[0], iso.ty + d[1], iso.reflected)


def _octa_pair(spec: PentagonSpec) -> Tuple[Tiling, Isometry]:
    """Single Octa-unit as a tiling, plus the mirror half's placement."""
    t = Tiling.seed(spec)
    t = glue(t, GlueStep(0, "DE", "DE", True))
    return t, t.placements[1]


def _row_vectors(spec: PentagonSpec) -> Tuple[Isometry, Vec, Vec]:
    """Mirror placement and the two lattice vectors of Octa-unit rows.

    v steps to the next unit within a row (the D corner of one unit
    drops into the reflex notch of the previous one); u steps from one
    row to the row stacked on top of it.
    """
    unit, iso_m = _octa_pair(spec)
    g = unit.base_geometry
    d_pt, e_pt = g.vertex("D"), g.vertex("E")
    v = (e_pt[0] - d_pt[0], e_pt[1] - d_pt[1])
    up = placement_for(unit, GlueStep(0, "AB", "BC", True))
    u = (up.tx - iso_m.tx, up.ty - iso_m.ty)
    return iso_m, u, v


def build_strip(spec: PentagonSpec, count: int) -> Tiling:
    """A straight strip of `count` Octa-units (STEP 1)."""
    if count < 1:
        raise DomainError(f"strip needs at least one unit, got {count}")
    t = Tiling.seed(spec)
    t = glue(t, GlueStep(0, "DE", "DE", True))
    for k in range(1, count):
        t = glue(t, GlueStep(2 * (k - 1), "EA", "CD", False))
        t = glue(t, GlueStep(2 * k, "DE", "DE", True))
    return t.with_mode("rows", {"rows": 1, "rows_len": count})


def build_wedge(spec: PentagonSpec, depth) -> Tiling:
    """Stacked rows 1..depth of Octa-units; row j holds j units.

    This is the fundamental domain of both the rotational and the hole
    assemblies: 2*depth*(depth+1)/2 units = depth*(depth+1) pentagons.
    """
    depth = _depth_of(depth)
    if depth < 1:
        raise DomainError(f"wedge depth must be >= 1, got {depth}")
    iso_m, u, v = _row_vectors(spec)
    placements: List[Isometry] = []
    for j in range(1, depth + 1):
        for k in range(1 - j, 1):
            d = ((j - 1) * u[0] + k * v[0], (j - 1) * u[1] + k * v[1])
            placements.append(_translate(IDENTITY, d))
            placements.append(_translate(iso_m, d))
    return Tiling(spec, placements)


def wedge_seam(wedge: Tiling) -> Isometry:
    """Rotation carrying a wedge onto the next wedge around the center.

    The returned isometry is a pure rotation by exactly B/3 (which is
    360/m for hole specs and 120/n for rotational specs).  Its fixed
    point is the tiling center.  The gluing below places the mirror
    half of the next wedge's first unit against the first unit's BC
    edge; the whole-wedge map follows by composing placements.
    """
    q = placement_for(wedge, GlueStep(1, "BC", "EA", True))
    return compose(q, inverse(wedge.placements[1]))


def seam_center(seam: Isometry) -> Vec:
    """Fixed point of a rotation isometry."""
    c, s = seam.rotation.cos(), seam.rotation.sin()
    det = (1 - c) * (1 - c) + s * s
    return (((1 - c) * seam.tx - s * seam.ty) / det,
            (s * seam.tx + (1 - c) * seam.ty) / det)


def _apply_to_all(iso: Isometry, t: Tiling) -> List[Isometry]:
    return [compose(iso, p) for p in t.placements]


def build_triunit(spec: PentagonSpec, mode_angle: ExactAngle, depth
                  ) -> Tiling:
    """Three wedges joined at relative rotations 0, mode_angle, 2*mode_angle."""
    if mode_angle != spec.B / 3:
        raise DomainError(
            f"mode angle {mode_angle!r} does not match this spec (B/3)")
    w = build_wedge(spec, depth)
    g = wedge_seam(w)
    placements = list(w.placements)
    placements += _apply_to_all(g, w)
    placements += _apply_to_all(compose(g, g), w)
    return Tiling(spec, placements)


def assemble_rotational(n: int, depth=1) -> Tiling:
    """n-fold rotationally symmetric patch: n three-wedge units around
    a center vertex where n angles B = 360/n meet exactly."""
    spec = spec_for_rotational(n)
    depth = _depth_of(depth)
    tri = build_triunit(spec, spec.B / 3, depth)
    per_wedge = depth * (depth + 1)  # pentagons per wedge
    step = GlueStep(2 * per_wedge, "CD", "AB", True)
    h = compose(placement_for(tri, step), inverse(tri.placements[1]))
    placements: List[Isometry] = []
    acc = IDENTITY
    for _ in range(n):
        placements += _apply_to_all(acc, tri)
        acc = compose(h, acc)
    return Tiling(spec, placements, mode="rotational",
                  params={"n": n, "depth": depth})


def assemble_hole(m: int, depth=1) -> Tiling:
    """Cm patch of m wedges around a regular m-gon hole."""
    spec = spec_for_hole(m)
    depth = _depth_of(depth)
    w = build_wedge(spec, depth)
    g = wedge_seam(w)
    placements: List[Isometry] = []
    acc = IDENTITY
    for _ in range(m):
        placements += _apply_to_all(acc, w)
        acc = compose(g, acc)
    return Tiling(spec, placements, mode="hole",
                  params={"m": m, "depth": depth})


def hole_center(m: int, depth: int = 1) -> Vec:
    """Center point of the regular m-gon hole of assemble_hole(m, ...)."""
    spec = spec_for_hole(m)
    return seam_center(wedge_seam(build_wedge(spec, 1)))


def build_row_tiling(spec: PentagonSpec, flips: Sequence[bool],
                     rows_len: int) -> Tiling:
    """Parallel rows of Octa-units, each optionally mirrored.

    Rows stack bottom-up; a mirrored row is congruent to an unmirrored
    one rotated by 180 degrees (the Octa-unit is achiral), so the seam
    between rows of equal flip is a pure translation and the seam
    between rows of opposite flip is a half-turn about a point on the
    shared boundary.  Both seams produce only A+B+C and 2D+2E vertex
    concentrations.
    """
    if not flips:
        raise DomainError("flips must be non-empty")
    if rows_len < 1:
        raise DomainError(f"rows_len must be >= 1, got {rows_len}")
    iso_m, u, v = _row_vectors(spec)
    unit, _ = _octa_pair(spec)
    # Half-turn seams between a row and a flipped row stacked on it:
    # g_flip when the lower row is unflipped, x_flip when it is flipped.
    g_flip = compose(placement_for(unit, GlueStep(0, "AB", "AB", False)),
                     inverse(unit.placements[0]))
    x_flip = compose(placement_for(unit, GlueStep(1, "AB", "AB", True)),
                     inverse(unit.placements[1]))
    lv = ((rows_len - 1) * v[0], (rows_len - 1) * v[1])
    placements: List[Isometry] = []
    base = g_flip if flips[0] else IDENTITY
    for i, flip in enumerate(flips):
        if i > 0:
            prev = flips[i - 1]
            if flip == prev:
                base = _translate(base, u)
            elif not prev:        # unflipped -> flipped
                base = compose(base, _translate(g_flip, lv))
            else:                 # flipped -> unflipped
                base = compose(base, _translate(x_flip, (-lv[0], -lv[1])))
        for k in range(rows_len):
            d = (k * v[0], k * v[1])
            placements.append(compose(base, _translate(IDENTITY, d)))
            placements.append(compose(base, _translate(iso_m, d)))
    return Tiling(spec, placements, mode="rows",
                  params={"rows": len(flips), "rows_len": rows_len,
                          "flips": tuple(bool(f) for f in flips)})


# ---------------------------------------------------------------------------
# Two-fold spirals.
#
# A spiral patch grows outward from a two-unit core in whole Octa-units,
# always two units at a time (a unit and its half-turn image), so every
# intermediate patch has exact C2 symmetry.  The unit sequences for the
# first two belts were found by a backtracking search over admissible
# gluings and are frozen below; larger belt counts re-run the same
# deterministic search.  The wrap-enabling angle coincidences differ per
# case: B = C (m = 8), A = B = E (m = 10), B = D (m = 14).
# ---------------------------------------------------------------------------

_SPIRAL_STEPS: Dict[int, Tuple[Tuple[int, str, str, int], ...]] = {
    8: (
        (0, "EA", "BC", 0), (4, "EA", "BC", 0), (1, "AB", "BC", 0),
        (1, "CD", "AB", 0), (1, "BC", "AB", 0), (5, "BC", "AB", 0),
        (5, "AB", "BC", 0), (9, "BC", "AB", 0), (11, "AB", "BC", 0),
        (13, "BC", "AB", 0), (17, "AB", "BC", 0), (13, "AB", "BC", 0),
        (17, "BC", "AB", 0), (21, "BC", "AB", 0), (25, "AB", "BC", 0),
        (25, "BC", "AB", 0), (29, "AB", "BC", 0), (35, "AB", "BC", 0),
        (35, "BC", "AB", 0), (37, "AB", "BC", 0), (41, "AB", "BC", 0),
        (45, "BC", "AB", 0), (41, "BC", "AB", 0), (45, "AB", "BC", 0),
        (49, "AB", "BC", 0), (53, "BC", "AB", 0), (57, "BC", "AB", 0),
        (61, "BC", "BC", 1), (61, "AB", "AB", 1), (65, "BC", "BC", 0),
        (69, "AB", "AB", 1), (73, "BC", "BC", 1), (73, "AB", "AB", 1),
        (77, "BC", "AB", 1), (81, "AB", "AB", 1), (120, "EA", "AB", 0),
    ),
    10: (
        (0, "BC", "BC", 0), (0, "CD", "AB", 0), (6, "EA", "BC", 0),
        (1, "CD", "AB", 0), (1, "AB", "BC", 0), (1, "BC", "AB", 0),
        (5, "AB", "BC", 0), (14, "EA", "BC", 0), (9, "AB", "BC", 0),
        (9, "BC", "AB", 0), (28, "EA", "BC", 0), (13, "AB", "BC", 0),
        (17, "AB", "BC", 0), (17, "BC", "AB", 0), (21, "BC", "AB", 0),
        (21, "AB", "BC", 0), (25, "BC", "AB", 0), (29, "AB", "BC", 0),
        (33, "BC", "AB", 0), (33, "AB", "BC", 0), (37, "BC", "AB", 0),
        (37, "AB", "BC", 0), (41, "BC", "AB", 0), (45, "BC", "AB", 0),
        (45, "AB", "BC", 0), (53, "BC", "AB", 0), (53, "AB", "BC", 0),
        (49, "AB", "BC", 0), (57, "BC", "AB", 0), (61, "AB", "BC", 0),
        (61, "BC", "AB", 0), (67, "AB", "BC", 0), (69, "BC", "AB", 0),
        (73, "AB", "BC", 0), (77, "AB", "BC", 0), (77, "BC", "AB", 0),
        (81, "AB", "BC", 0), (85, "AB", "BC", 0), (85, "BC", "AB", 0),
        (97, "AB", "BC", 0), (97, "BC", "AB", 0), (89, "AB", "BC", 0),
        (93, "BC", "AB", 0), (101, "AB", "BC", 0), (105, "AB", "BC", 0),
        (105, "BC", "AB", 0), (109, "AB", "BC", 0), (113, "AB", "BC", 0),
    ),
    14: (
        (0, "BC", "AB", 0), (0, "EA", "BC", 0), (0, "CD", "AB", 0),
        (10, "EA", "BC", 0), (1, "CD", "AB", 0), (1, "AB", "BC", 0),
        (5, "CD", "AB", 0), (1, "BC", "AB", 0), (5, "AB", "BC", 0),
        (5, "BC", "AB", 0), (11, "BC", "AB", 0), (9, "AB", "BC", 0),
        (13, "AB", "BC", 0), (13, "BC", "AB", 0), (17, "BC", "AB", 0),
        (19, "AB", "BC", 0), (21, "AB", "BC", 0), (21, "BC", "AB", 0),
        (25, "BC", "AB", 0), (29, "AB", "BC", 0), (25, "AB", "BC", 0),
        (29, "BC", "AB", 0), (33, "BC", "AB", 0), (37, "BC", "AB", 0),
        (37, "AB", "BC", 0), (41, "BC", "AB", 0), (45, "AB", "BC", 0),
        (45, "BC", "AB", 0), (49, "AB", "BC", 0), (53, "BC", "AB", 0),
        (53, "AB", "BC", 0), (57, "BC", "AB", 0), (61, "AB", "BC", 0),
        (61, "BC", "AB", 0), (65, "AB", "BC", 0), (69, "BC", "AB", 0),
        (69, "AB", "BC", 0), (73, "BC", "AB", 0), (77, "AB", "BC", 0),
        (81, "BC", "AB", 0), (77, "BC", "AB", 0), (81, "AB", "BC", 0),
        (85, "AB", "BC", 0), (89, "BC", "AB", 0), (93, "BC", "AB", 0),
        (99, "AB", "BC", 0), (97, "BC", "AB", 0), (101, "AB", "BC", 0),
        (105, "BC", "AB", 0), (109, "BC", "AB", 0), (109, "AB", "BC", 0),
        (113, "BC", "AB", 0), (117, "AB", "BC", 0), (121, "AB", "BC", 0),
        (121, "BC", "AB", 0), (125, "AB", "BC", 0), (129, "BC", "AB", 0),
        (133, "BC", "BC", 1), (133, "AB", "AB", 1), (139, "BC", "AB", 0),
        (141, "AB", "AB", 1), (145, "AB", "AB", 1), (145, "BC", "AB", 0),
        (149, "AB", "AB", 1), (153, "BC", "AB", 0), (157, "BC", "AB", 0),
    ),
}

# Candidate-ordering strategy of the frozen search, kept for belt counts
# beyond the frozen scripts: nearest-fit ordering, except m = 14 where a
# fixed shuffle order was required to escape the plain row packing.
_SPIRAL_ORDER_SEED: Dict[int, Optional[int]] = {8: None, 10: None, 14: 1029}


class _SpiralGrower:
    """C2-symmetric growth by whole Octa-units around a fixed center."""

    def __init__(self, spec: PentagonSpec, radius: float,
                 order_seed: Optional[int], node_cap: int = 500000):
        self.spec = spec
        t = Tiling.seed(spec)
        t = glue(t, GlueStep(0, "DE", "DE", True))
        a, b = t.base_geometry.edge("AB")
        self.center: Vec = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        self.half_turn = rotation_about(self.center, deg(180))
        self.seed_tiling = Tiling(spec, list(t.placements)
                                  + [compose(self.half_turn, p)
                                     for p in t.placements])
        self.radius = radius
        self.rng = None if order_seed is None else random.Random(order_seed)
        self.node_cap = node_cap
        self.nodes = 0

    def _boundary(self, t: Tiling):
        inc = build_incidence(t)
        out = []
        for (p1, p2), recs in inc.edges.items():
            if len(recs) == 1:
                a, b = inc.points[p1], inc.points[p2]
                mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
                d = math.hypot(mid[0] - self.center[0],
                               mid[1] - self.center[1])
                out.append((d, recs[0]))
        out.sort(key=lambda r: (r[0], r[1][0], r[1][1]))
        return out

    def coverage(self, t: Tiling) -> float:
        return self._boundary(t)[0][0]

    def _oversum(self, t: Tiling) -> bool:
        inc = build_incidence(t)
        for recs in inc.vertices.values():
            total = sum(t.spec.angle(lab).degrees for _, lab in recs)
            if total > 360:
                return True
        return False

    def unit_placements(self, t: Tiling, step: GlueStep) -> List[Isometry]:
        """Guest pentagon, its DE mirror, and the half-turn images."""
        iso = placement_for(t, step)
        t1 = t.with_tile(iso)
        iso_m = placement_for(t1, GlueStep(t.count, "DE", "DE", True))
        return [iso, iso_m, compose(self.half_turn, iso),
                compose(self.half_turn, iso_m)]

    def add_unit_pair(self, t: Tiling, step: GlueStep) -> Optional[Tiling]:
        isos = self.unit_placements(t, step)
        polys = [i.apply_all(t.base_geometry.vertices) for i in isos]
        boxes = [bbox(p) for p in polys]
        for i in range(4):
            for j in range(i + 1, 4):
                if bboxes_overlap(boxes[i], boxes[j]) and \
                        intersection_area(polys[i], polys[j]) > OVERLAP_AREA_TOL:
                    return None
        for k in range(t.count):
            kb = bbox(t.tile_vertices(k))
            for i in range(4):
                if bboxes_overlap(kb, boxes[i]) and \
                        intersection_area(t.tile_vertices(k), polys[i]) > OVERLAP_AREA_TOL:
                    return None
        t2 = t
        for iso in isos:
            t2 = t2.with_tile(iso)
        if self._oversum(t2):
            return None
        return t2

    def _ordered_candidates(self, t: Tiling, frontier) -> List[GlueStep]:
        cands = [st for st in extend_search(t, frontier)
                 if st.guest_edge != "DE"]
        if self.rng is not None:
            self.rng.shuffle(cands)
            return cands
        scored = []
        for st in cands:
            iso = placement_for(t, st)
            far = max(math.hypot(p[0] - self.center[0],
                                 p[1] - self.center[1])
                      for p in iso.apply_all(t.base_geometry.vertices))
            scored.append((far, st))
        scored.sort(key=lambda x: x[0])
        return [st for _, st in scored]

    def grow(self, t: Tiling) -> Optional[Tiling]:
        self.nodes += 1
        if self.nodes > self.node_cap:
            return None
        bd = self._boundary(t)
        if bd[0][0] >= self.radius:
            return t
        frontier = bd[0][1]
        try:
            cands = self._ordered_candidates(t, frontier)
        except GlueError:
            return None
        for st in cands:
            t2 = self.add_unit_pair(t, st)
            if t2 is None:
                continue
            r = self.grow(t2)
            if r is not None:
                return r
        return None


def _belt_spacing(spec: PentagonSpec) -> float:
    _, u, v = _row_vectors(spec)
    return abs(u[0] * v[1] - u[1] * v[0]) / math.hypot(v[0], v[1])


def spiral_two_fold(m: int, belts: int = 1) -> Tiling:
    """Two-armed spiral patch with exact C2 symmetry.

    The patch consists of two congruent arms of Octa-unit belts related
    by a half turn about the core; `belts` sets how many belt widths of
    wrapping each arm receives beyond the core.
    """
    if m not in _SPIRAL_STEPS:
        raise DomainError(
            f"two-fold spirals exist for m in (8, 10, 14), got {m}")
    if belts < 1:
        raise DomainError(f"belts must be >= 1, got {belts}")
    spec = spec_for_hole(m)
    h = _belt_spacing(spec)
    radius = (belts + 2) * h
    grower = _SpiralGrower(spec, radius, _SPIRAL_ORDER_SEED[m])
    t = grower.seed_tiling
    if belts <= 2:
        for host, he, ge, refl in _SPIRAL_STEPS[m]:
            if grower.coverage(t) >= radius:
                break
            t2 = grower.add_unit_pair(
                t, GlueStep(host, he, guest_edge=ge, guest_reflected=bool(refl)))
            if t2 is None:
                raise RuntimeError("frozen spiral script failed to replay")
            t = t2
        if grower.coverage(t) < radius:
            raise RuntimeError("frozen spiral script ended short of target")
    else:
        t = grower.grow(t)
        if t is None:
            raise RuntimeError(
                f"spiral growth failed for m={m}, belts={belts}")
    return t.with_mode("spiral", {"m": m, "belts": belts})
