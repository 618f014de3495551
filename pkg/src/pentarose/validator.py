"""Patch certification: vertex classification, edge-to-edge and
overlap/gap checks, point-group detection, and hole-shape checks.

Angle sums are always compared in exact rational arithmetic; only
coordinate comparisons use float tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .angles import ExactAngle, deg
from .clip import bbox, bboxes_overlap, intersection_area
from .incidence import IncidenceMap, build_incidence
from .pentagon import Point, polygon_signed_area
from .tiling import MERGE_TOL, OVERLAP_AREA_TOL, Tiling
from .transform import (Isometry, compose, reflection_about, rotation_about)

GAP_REL_TOL = 1e-6
SYM_TRANSLATION_TOL = 1e-9
HOLE_TOL = 1e-9

# Vertex concentrations valid for every pentagon of the family.
GENERIC_KINDS = ("ABC", "EEC", "DDAB", "DDEE")
_KIND_BY_LABELS = {"ABC": "ABC", "CEE": "EEC", "ABDD": "DDAB", "DDEE": "DDEE"}


@dataclass(frozen=True)
class VertexClass:
    kind: str            # ABC, EEC, DDAB, DDEE, centerB(n), flat_DE, other
    count: int
    labels: str = ""     # sorted label multiset, for kinds other/centerB


@dataclass
class ValidationReport:
    edge_to_edge: bool
    vertex_classes: List[VertexClass]
    overlaps: List[Tuple[int, int]]
    gaps: bool
    symmetry: Tuple[int, int, Point]   # rotation order, axis count, center
    hole: Optional[Dict[str, float]] = None
    planar: bool = True
    valid: bool = False
    failures: List[str] = field(default_factory=list)


def _vertex_kind(labels: Sequence[str], total: Fraction, B: ExactAngle,
                 flat: bool) -> str:
    key = "".join(sorted(labels))
    if flat and total == 180:
        return "flat_DE" if key == "DE" else "other"
    if total != 360:
        return "other"
    if key in _KIND_BY_LABELS:
        return _KIND_BY_LABELS[key]
    if set(key) == {"B"}:
        return f"centerB({len(labels)})"
    return "other"


def _boundary_point_ids(inc: IncidenceMap) -> Set[int]:
    out: Set[int] = set()
    for (p1, p2), recs in inc.edges.items():
        if len(recs) == 1:
            out.add(p1)
            out.add(p2)
    return out


def _flat_point_ids(t: Tiling, inc: IncidenceMap) -> Set[int]:
    """Snapped points lying strictly inside some tile's edge.

    Such a point can only sit on an unshared edge (a fully shared edge
    matches endpoint to endpoint), and it must itself be an endpoint of
    unshared edges, so the scan is restricted to the boundary graph.
    """
    out: Set[int] = set()
    segs = []
    for (p1, p2), recs in inc.edges.items():
        if len(recs) == 1:
            segs.append((inc.points[p1], inc.points[p2]))
    for pid in _boundary_point_ids(inc):
        p = inc.points[pid]
        for a, b in segs:
            ax, ay = a
            dx, dy = b[0] - ax, b[1] - ay
            L2 = dx * dx + dy * dy
            u = ((p[0] - ax) * dx + (p[1] - ay) * dy) / L2
            if u <= 1e-7 or u >= 1 - 1e-7:
                continue
            fx, fy = ax + u * dx, ay + u * dy
            if math.hypot(p[0] - fx, p[1] - fy) < MERGE_TOL:
                out.add(pid)
                break
    return out


def classify_vertices(t: Tiling, inc: Optional[IncidenceMap] = None
                      ) -> List[VertexClass]:
    """Exact classification of interior vertex concentrations.

    Boundary vertices are skipped.  A vertex lying inside another tile's
    edge whose angles sum to exactly 180 is the flat concentration of a
    non-edge-to-edge seam; any other exact-sum mismatch is "other".
    """
    if inc is None:
        inc = build_incidence(t)
    boundary = _boundary_point_ids(inc)
    flats = _flat_point_ids(t, inc)
    counts: Dict[Tuple[str, str], int] = {}
    for pid, recs in inc.vertices.items():
        if pid in boundary and pid not in flats:
            continue
        labels = [lab for _, lab in recs]
        total = sum((t.spec.angle(lab).degrees for lab in labels),
                    Fraction(0))
        kind = _vertex_kind(labels, total, t.spec.B, pid in flats)
        key = (kind, "".join(sorted(labels)))
        counts[key] = counts.get(key, 0) + 1
    out = []
    for (kind, labels), c in sorted(counts.items()):
        out.append(VertexClass(kind=kind, count=c,
                               labels=labels if kind in ("other",)
                               or kind.startswith("centerB") else ""))
    return out


def check_edge_to_edge(t: Tiling, inc: Optional[IncidenceMap] = None) -> bool:
    """True iff no tile vertex lies strictly inside another tile's edge."""
    if inc is None:
        inc = build_incidence(t)
    return not _flat_point_ids(t, inc)


def overlapping_pairs(t: Tiling) -> List[Tuple[int, int]]:
    """Tile pairs with interior intersection area above tolerance.

    Bounding boxes are sorted on x so most disjoint pairs are skipped
    before any polygon clipping happens.
    """
    boxes = [bbox(t.tile_vertices(i)) for i in range(t.count)]
    order = sorted(range(t.count), key=lambda i: boxes[i][0])
    out = []
    for a in range(len(order)):
        i = order[a]
        for b in range(a + 1, len(order)):
            j = order[b]
            if boxes[j][0] > boxes[i][2]:
                break
            if not bboxes_overlap(boxes[i], boxes[j]):
                continue
            if intersection_area(t.tile_vertices(i),
                                 t.tile_vertices(j)) > OVERLAP_AREA_TOL:
                out.append((min(i, j), max(i, j)))
    out.sort()
    return out


def overlapping_pairs_oracle(t: Tiling) -> List[Tuple[int, int]]:
    """Brute-force cross-check of overlapping_pairs via shapely.

    Coordinates are snapped to a 1e-12 grid first; raw last-bit noise at
    shared vertices can make GEOS report phantom intersections.
    """
    import shapely
    from shapely.geometry import Polygon
    polys = [shapely.set_precision(Polygon(t.tile_vertices(i)), 1e-12)
             for i in range(t.count)]
    out = []
    for i in range(t.count):
        for j in range(i + 1, t.count):
            if polys[i].intersection(polys[j]).area > OVERLAP_AREA_TOL:
                out.append((i, j))
    return out


def check_overlap_gap(t: Tiling) -> Tuple[List[Tuple[int, int]], bool]:
    """Overlapping tile pairs, and whether the covered area falls short.

    The gap check is pure area bookkeeping over the patch's own covered
    region: the area of the union of all tiles must equal tile count
    times the pentagon area.  A hole enclosed by a hole-mode patch is
    not a gap (it is outside the covered region), and neither are
    disjoint components.
    """
    overlaps = overlapping_pairs(t)
    if t.count == 0:
        return overlaps, False
    import shapely
    from shapely.geometry import Polygon
    from shapely.ops import unary_union
    # Snap coordinates to a fine grid first: GEOS noding on raw floats
    # can drop whole tiles when vertices differ in the last few bits.
    union = unary_union([shapely.set_precision(Polygon(t.tile_vertices(i)),
                                               1e-9)
                         for i in range(t.count)])
    expected = t.count * abs(t.base_geometry.signed_area)
    gaps = abs(union.area - expected) / expected > GAP_REL_TOL
    return overlaps, gaps


def _placement_key(iso: Isometry):
    r = iso.rotation.degrees
    return (r.numerator, r.denominator, iso.reflected)


def _placement_map(t: Tiling) -> Dict[tuple, List[Tuple[float, float]]]:
    m: Dict[tuple, List[Tuple[float, float]]] = {}
    for p in t.placements:
        m.setdefault(_placement_key(p), []).append((p.tx, p.ty))
    return m


def _maps_to_itself(t: Tiling, g: Isometry,
                    pmap: Dict[tuple, List[Tuple[float, float]]]) -> bool:
    used: Dict[tuple, List[bool]] = {k: [False] * len(v)
                                     for k, v in pmap.items()}
    for p in t.placements:
        q = compose(g, p)
        cands = pmap.get(_placement_key(q))
        if cands is None:
            return False
        flags = used[_placement_key(q)]
        hit = False
        for i, (x, y) in enumerate(cands):
            if flags[i]:
                continue
            if abs(x - q.tx) <= SYM_TRANSLATION_TOL and \
                    abs(y - q.ty) <= SYM_TRANSLATION_TOL:
                flags[i] = True
                hit = True
                break
        if not hit:
            return False
    return True


def patch_center(t: Tiling) -> Point:
    """Centroid of the tile centroids (all tiles are congruent)."""
    cx = cy = 0.0
    for i in range(t.count):
        vs = t.tile_vertices(i)
        cx += sum(p[0] for p in vs) / 5
        cy += sum(p[1] for p in vs) / 5
    return (cx / t.count, cy / t.count)


def detect_symmetry(t: Tiling) -> Tuple[int, int, Point]:
    """Point group of the placement set about the patch centroid.

    Returns (rotation order, reflection axis count, center).  Rotations
    are compared exactly; translation parts within 1e-9.  Candidate
    orders are divisors of the tile count and of the mode parameters,
    plus a small general sweep.
    """
    if t.count == 0:
        return (1, 0, (0.0, 0.0))
    c = patch_center(t)
    pmap = _placement_map(t)
    cands: Set[int] = set(range(1, min(t.count, 48) + 1))
    for v in list(t.params.values()) + [t.count]:
        if isinstance(v, int) and v > 0:
            for d in range(1, v + 1):
                if v % d == 0:
                    cands.add(d)
    order = 1
    for r in sorted((x for x in cands if x <= t.count), reverse=True):
        if r <= order:
            break
        if _maps_to_itself(t, rotation_about(c, deg(360, r)), pmap):
            order = r
            break
    # A reflection axis through the center must map the first placement
    # onto some placement with the reflected flag toggled, which pins
    # the axis heading exactly, so candidates are finite.
    p0 = t.placements[0]
    axes: Set[Fraction] = set()
    seen: Set[Fraction] = set()
    for p in t.placements:
        if p.reflected == p0.reflected:
            continue
        psi = ((p.rotation + p0.rotation) / 2).mod360().degrees % 180
        if psi in seen:
            continue
        seen.add(psi)
        if _maps_to_itself(t, reflection_about(c, ExactAngle(psi)), pmap):
            axes.add(psi)
    return (order, len(axes), c)


def hole_boundary(t: Tiling, inc: Optional[IncidenceMap] = None
                  ) -> List[Point]:
    """Vertices of the inner boundary cycle of a hole-mode patch."""
    if inc is None:
        inc = build_incidence(t)
    free = [k for k, v in inc.edges.items() if len(v) == 1]
    if not free:
        raise ValueError("patch has no boundary")
    c = patch_center(t)
    # connected components of the free-edge graph
    adj: Dict[int, List[int]] = {}
    for a, b in free:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen: Set[int] = set()
    comps: List[List[int]] = []
    for start in adj:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(comp)
    if len(comps) < 2:
        raise ValueError("patch has no inner boundary cycle")

    def mean_dist(comp):
        return sum(math.hypot(inc.points[p][0] - c[0],
                              inc.points[p][1] - c[1]) for p in comp) / len(comp)

    inner = min(comps, key=mean_dist)
    inner_set = set(inner)
    ring_adj = {p: [q for q in adj[p] if q in inner_set] for p in inner}
    if any(len(v) != 2 for v in ring_adj.values()):
        raise ValueError("inner boundary is not a simple cycle")
    cycle = [inner[0]]
    prev = None
    while True:
        nxts = [q for q in ring_adj[cycle[-1]] if q != prev]
        prev = cycle[-1]
        cycle.append(nxts[0])
        if cycle[-1] == cycle[0]:
            break
    return [inc.points[p] for p in cycle[:-1]]


def check_hole(t: Tiling, m: int) -> Dict[str, float]:
    """Certify the inner boundary as a regular m-gon with unit sides."""
    if t.mode != "hole":
        raise ValueError(f"not a hole-mode tiling (mode={t.mode!r})")
    ring = hole_boundary(t)
    if len(ring) != m:
        raise ValueError(f"inner boundary has {len(ring)} sides, expected {m}")
    cx = sum(p[0] for p in ring) / m
    cy = sum(p[1] for p in ring) / m
    radius = 1.0 / (2.0 * math.sin(math.pi / m))
    side_dev = max(abs(math.hypot(b[0] - a[0], b[1] - a[1]) - 1.0)
                   for a, b in zip(ring, ring[1:] + ring[:1]))
    radius_dev = max(abs(math.hypot(p[0] - cx, p[1] - cy) - radius)
                     for p in ring)
    if side_dev > HOLE_TOL or radius_dev > HOLE_TOL:
        raise ValueError(
            f"hole is not regular: side dev {side_dev:g}, "
            f"radius dev {radius_dev:g}")
    return {"m": m, "side_deviation": side_dev,
            "radius_deviation": radius_dev,
            "center_x": cx, "center_y": cy}


# Coincidence concentrations that become exact at the special angles
# used by the two-fold spirals (B = C, A = B = E, B = D respectively).
SPIRAL_OTHER_LABELS = {
    Fraction(135): {"ABB", "ACC", "BEE", "AADE"},
    Fraction(108): {"BBC"},
    Fraction(540, 7): {"ABBB"},
}


def _allowed_other(t: Tiling) -> Set[str]:
    if t.mode == "spiral":
        return SPIRAL_OTHER_LABELS.get(t.spec.B.degrees, set())
    return set()


def validate(t: Tiling) -> ValidationReport:
    """Full certification; the verdict depends on the declared mode.

    Flat seam vertices are legal only in rows mode; the spiral modes
    additionally allow their special-angle coincidence concentrations.
    A declared symmetry (rotational, hole, spiral) must be detected
    exactly, with no reflection axes.
    """
    inc = build_incidence(t)
    failures: List[str] = []
    planar = not inc.planarity_violations
    if not planar:
        failures.append("more than two tiles share an edge")
    classes = classify_vertices(t, inc)
    e2e = check_edge_to_edge(t, inc)
    overlaps, gaps = check_overlap_gap(t)
    symmetry = detect_symmetry(t)
    if overlaps:
        failures.append(f"{len(overlaps)} overlapping tile pairs")
    if gaps:
        failures.append("covered area differs from tile count x tile area")
    allowed_other = _allowed_other(t)
    for vc in classes:
        if vc.kind == "other" and vc.labels not in allowed_other:
            failures.append(f"invalid concentration {vc.labels or vc.kind}")
        if vc.kind == "flat_DE" and t.mode != "rows":
            failures.append("flat seam vertex outside rows mode")
    if not e2e and t.mode != "rows":
        failures.append("not edge-to-edge")
    hole = None
    expect: Optional[Tuple[int, int]] = None
    if t.mode == "rotational":
        expect = (t.params["n"], 0)
    elif t.mode == "hole":
        expect = (t.params["m"], 0)
        try:
            hole = check_hole(t, t.params["m"])
        except ValueError as exc:
            failures.append(str(exc))
    elif t.mode == "spiral":
        expect = (2, 0)
    if expect is not None and (symmetry[0], symmetry[1]) != expect:
        failures.append(
            f"symmetry C{symmetry[0]} with {symmetry[1]} axes, expected "
            f"C{expect[0]} with {expect[1]}")
    report = ValidationReport(
        edge_to_edge=e2e, vertex_classes=classes, overlaps=overlaps,
        gaps=gaps, symmetry=symmetry, hole=hole, planar=planar,
        valid=not failures, failures=failures)
    return report
