"""Vertex and edge incidence extraction with snap-rounded keys.

Placed coordinates are floats, so coinciding vertices are merged within
a radius (1e-7) that sits far above accumulated placement error and far
below the smallest feature separation.  Points are hashed into grid
cells of that size and the 3x3 neighborhood is probed, so points
straddling a cell boundary cannot be split into two keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .pentagon import EDGE_LABELS, VERTEX_LABELS, Point
from .tiling import MERGE_TOL, Tiling


class SnapIndex:
    """Maps nearby points (within tol) to a shared integer id."""

    def __init__(self, tol: float = MERGE_TOL):
        self.tol = tol
        self._cells: Dict[Tuple[int, int], List[int]] = {}
        self.points: List[Point] = []

    def _cell(self, p: Point) -> Tuple[int, int]:
        return (round(p[0] / self.tol), round(p[1] / self.tol))

    def find(self, p: Point) -> int:
        """Id of an existing point within tol of p, or -1."""
        cx, cy = self._cell(p)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for pid in self._cells.get((cx + dx, cy + dy), ()):
                    q = self.points[pid]
                    if abs(q[0] - p[0]) <= self.tol and abs(q[1] - p[1]) <= self.tol:
                        return pid
        return -1

    def insert(self, p: Point) -> int:
        pid = self.find(p)
        if pid >= 0:
            return pid
        pid = len(self.points)
        self.points.append(p)
        self._cells.setdefault(self._cell(p), []).append(pid)
        return pid


@dataclass
class IncidenceMap:
    """Shared-vertex and shared-edge structure of a patch."""

    points: List[Point]
    vertices: Dict[int, List[Tuple[int, str]]]  # point id -> (tile, vertex label)
    edges: Dict[Tuple[int, int], List[Tuple[int, str]]]  # (pid, pid) -> (tile, edge label)
    planarity_violations: List[Tuple[int, int]] = field(default_factory=list)

    def boundary_edges(self) -> List[Tuple[int, int]]:
        return [k for k, v in self.edges.items() if len(v) == 1]


def build_incidence(t: Tiling) -> IncidenceMap:
    index = SnapIndex()
    vertices: Dict[int, List[Tuple[int, str]]] = {}
    edges: Dict[Tuple[int, int], List[Tuple[int, str]]] = {}
    violations: List[Tuple[int, int]] = []
    for i in range(t.count):
        verts = t.tile_vertices(i)
        pids = [index.insert(p) for p in verts]
        for k, lab in enumerate(VERTEX_LABELS):
            vertices.setdefault(pids[k], []).append((i, lab))
        for k, lab in enumerate(EDGE_LABELS):
            a, b = pids[k], pids[(k + 1) % 5]
            key = (a, b) if a <= b else (b, a)
            recs = edges.setdefault(key, [])
            recs.append((i, lab))
            if len(recs) > 2:
                violations.append(key)
    return IncidenceMap(points=index.points, vertices=vertices, edges=edges,
                        planarity_violations=violations)
