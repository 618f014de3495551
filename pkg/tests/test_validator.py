import math
from dataclasses import replace

import pytest

from pentarose.angles import deg
from pentarose.builders import (assemble_hole, assemble_rotational,
                                build_row_tiling, build_strip,
                                spiral_two_fold)
from pentarose.pentagon import spec_for_hole, spec_for_rotational
from pentarose.tiling import GlueStep, Tiling, glue
from pentarose.transform import Isometry
from pentarose.validator import (check_edge_to_edge, check_hole,
                                 check_overlap_gap, classify_vertices,
                                 detect_symmetry, overlapping_pairs,
                                 overlapping_pairs_oracle, validate)


def perturb(t, i, dx=0.01, dy=0.0):
    p = t.placements[i]
    moved = Isometry(p.rotation, p.tx + dx, p.ty + dy, p.reflected)
    return Tiling(t.spec, t.placements[:i] + (moved,) + t.placements[i + 1:],
                  mode=t.mode, params=t.params)


def test_rotational_patch_classification():
    t = assemble_rotational(5, 2)
    kinds = {vc.kind for vc in classify_vertices(t)}
    assert kinds == {"ABC", "EEC", "DDAB", "DDEE", "centerB(5)"}


def test_strip_interior_classification():
    t = build_strip(spec_for_hole(10), 4)
    kinds = {vc.kind for vc in classify_vertices(t)}
    assert kinds <= {"ABC", "DDEE"}


def test_rows_classification():
    t = build_row_tiling(spec_for_hole(11), (False, True, False), 4)
    kinds = {vc.kind for vc in classify_vertices(t)}
    assert kinds <= {"ABC", "DDEE"}


def test_single_tile_is_edge_to_edge_and_gap_free():
    t = Tiling.seed(spec_for_hole(9))
    assert check_edge_to_edge(t)
    overlaps, gaps = check_overlap_gap(t)
    assert overlaps == [] and not gaps


def test_flat_vertex_detection():
    # slide a second octa-unit half a unit along the strip axis so its
    # corner lands inside the first unit's top edge
    spec = spec_for_rotational(6)  # B = 60, all edges unit
    t = glue(Tiling.seed(spec), GlueStep(0, "AB", "AB", True))
    p = t.placements[1]
    shifted = Isometry(p.rotation, p.tx + 0.5, p.ty, p.reflected)
    t2 = Tiling(spec, (t.placements[0], shifted))
    assert not check_edge_to_edge(t2)
    assert check_edge_to_edge(t)


def test_overlap_detection_and_oracle_agree():
    t = assemble_rotational(4, 2)
    assert overlapping_pairs(t) == []
    assert overlapping_pairs_oracle(t) == []
    bad = perturb(t, 7)
    a, b = overlapping_pairs(bad), overlapping_pairs_oracle(bad)
    assert sorted(a) == sorted(b)
    assert a


def test_duplicated_tile_is_an_overlap():
    t = assemble_rotational(3, 1)
    dup = t.with_tile(t.placements[2])
    assert (2, t.count) in overlapping_pairs(dup)


def test_disjoint_tiles_are_not_a_gap():
    spec = spec_for_hole(9)
    far = Isometry(deg(0), 100.0, 0.0, False)
    t = Tiling(spec, (Isometry(deg(0)), far))
    overlaps, gaps = check_overlap_gap(t)
    assert overlaps == [] and not gaps


def test_missing_tile_shows_as_symmetry_break_not_gap():
    t = assemble_rotational(5, 1)
    partial = Tiling(t.spec, t.placements[:-1], mode=t.mode, params=t.params)
    report = validate(partial)
    assert not report.valid


def test_detected_symmetry_of_fixtures():
    assert detect_symmetry(assemble_rotational(5, 2))[:2] == (5, 0)
    assert detect_symmetry(assemble_hole(8, 1))[:2] == (8, 0)
    assert detect_symmetry(spiral_two_fold(10, 1))[:2] == (2, 0)


def test_reflection_axes_of_symmetric_strip():
    # one octa-unit alone has a mirror axis through D and the AB midpoint
    spec = spec_for_hole(9)
    t = glue(Tiling.seed(spec), GlueStep(0, "DE", "DE", True))
    order, axes, _ = detect_symmetry(t)
    assert axes == 1


def test_hole_check_accepts_and_rejects():
    for m in (7, 12):
        rep = check_hole(assemble_hole(m, 1), m)
        assert rep["side_deviation"] < 1e-9
        assert rep["radius_deviation"] < 1e-9
    with pytest.raises(ValueError):
        check_hole(assemble_rotational(4, 1), 4)
    with pytest.raises(ValueError):
        check_hole(assemble_hole(8, 1), 9)


def test_hole_radius_closed_form():
    rep = check_hole(assemble_hole(7, 1), 7)
    # independent evaluation of the circumradius of a unit-side 7-gon
    assert abs(1.0 / (2.0 * math.sin(math.pi / 7)) - 1.152382) < 1e-6


def test_validate_verdicts():
    assert validate(assemble_rotational(7, 1)).valid
    assert validate(assemble_hole(14, 1)).valid
    assert validate(spiral_two_fold(8, 1)).valid
    assert validate(build_row_tiling(spec_for_hole(11), (True, False), 3)).valid
    assert not validate(perturb(assemble_rotational(7, 1), 3)).valid


def test_validator_is_order_invariant():
    t = assemble_hole(9, 1)
    shuffled = Tiling(t.spec, t.placements[::-1], mode=t.mode, params=t.params)
    r1, r2 = validate(t), validate(shuffled)
    assert r1.valid and r2.valid
    assert {(vc.kind, vc.count) for vc in r1.vertex_classes} == \
        {(vc.kind, vc.count) for vc in r2.vertex_classes}
    assert r1.symmetry[0] == r2.symmetry[0]


def test_spiral_coincidences_rejected_outside_spiral_mode():
    t = spiral_two_fold(8, 1)
    freeform = Tiling(t.spec, t.placements, mode="freeform")
    report = validate(freeform)
    assert any("concentration" in f for f in report.failures)


def test_exact_angle_mutation_breaks_classification():
    t = assemble_rotational(5, 2)
    spec = t.spec
    a = spec.A.degrees
    mutated = replace(spec, A=deg(a.numerator + 1, a.denominator))
    twisted = Tiling(mutated, t.placements, mode=t.mode, params=t.params)
    kinds = {vc.kind for vc in classify_vertices(twisted)}
    assert "other" in kinds
