"""Rotationally symmetric pentagon tilings: construction and verification."""

from .angles import ExactAngle, deg
from .builders import (WedgeParams, assemble_hole, assemble_rotational,
                       build_row_tiling, build_strip, build_triunit,
                       build_wedge, spiral_two_fold)
from .docio import (DocumentError, parse, read_document, serialize,
                    write_document)
from .pentagon import (DomainError, OctaUnit, PentagonGeom, PentagonSpec,
                       angles_from_B, realize, reflect_to_octa,
                       spec_for_hole, spec_for_rotational)
from .svg import RenderStyle, render_svg
from .tables import hole_table, rotational_table
from .tiling import GlueError, GlueStep, Tiling, extend_search, glue
from .transform import IDENTITY, Isometry, compose, inverse, rotation_about
from .validator import (ValidationReport, VertexClass, check_edge_to_edge,
                        check_hole, check_overlap_gap, classify_vertices,
                        detect_symmetry, hole_boundary, validate)

__all__ = [
    "ExactAngle", "deg", "DomainError", "OctaUnit", "PentagonGeom",
    "PentagonSpec", "angles_from_B", "realize", "reflect_to_octa",
    "spec_for_hole", "spec_for_rotational", "GlueError", "GlueStep",
    "Tiling", "extend_search", "glue", "IDENTITY", "Isometry", "compose",
    "inverse", "rotation_about", "WedgeParams", "assemble_hole",
    "assemble_rotational", "build_row_tiling", "build_strip",
    "build_triunit", "build_wedge", "spiral_two_fold", "DocumentError",
    "parse", "read_document", "serialize", "write_document", "RenderStyle",
    "render_svg", "hole_table", "rotational_table", "ValidationReport",
    "VertexClass", "check_edge_to_edge", "check_hole", "check_overlap_gap",
    "classify_vertices", "detect_symmetry", "hole_boundary", "validate",
]
