import math

import pytest

from pentarose.angles import deg
from pentarose.builders import (WedgeParams, assemble_hole,
                                assemble_rotational, build_row_tiling,
                                build_strip, build_triunit, build_wedge,
                                seam_center, spiral_two_fold, wedge_seam)
from pentarose.incidence import build_incidence
from pentarose.pentagon import DomainError, spec_for_hole, spec_for_rotational
from pentarose.validator import overlapping_pairs


def interior_sums_exact(t):
    inc = build_incidence(t)
    boundary = set()
    for key, recs in inc.edges.items():
        if len(recs) == 1:
            boundary.update(key)
    for pid, recs in inc.vertices.items():
        total = sum(t.spec.angle(lab).degrees for _, lab in recs)
        if pid in boundary:
            if total > 360:
                return False
        elif total != 360:
            return False
    return True


def test_strip_counts_and_mode():
    spec = spec_for_hole(10)
    for k in (1, 2, 5):
        t = build_strip(spec, k)
        assert t.count == 2 * k
        assert t.mode == "rows"
        assert not overlapping_pairs(t)
        assert interior_sums_exact(t)
    with pytest.raises(DomainError):
        build_strip(spec, 0)


def test_wedge_row_structure():
    spec = spec_for_hole(12)
    for depth in (1, 2, 3):
        t = build_wedge(spec, depth)
        assert t.count == depth * (depth + 1)
        assert t.count == WedgeParams(depth).pentagons
        assert not overlapping_pairs(t)


def test_wedge_seam_is_pure_rotation_by_a_third_of_b():
    for m in (7, 9, 16):
        spec = spec_for_hole(m)
        g = wedge_seam(build_wedge(spec, 2))
        assert not g.reflected
        assert g.rotation == (spec.B / 3).mod360()
        assert g.rotation == deg(360, m)
        c = seam_center(g)
        got = g.apply(c)
        assert math.hypot(got[0] - c[0], got[1] - c[1]) < 1e-9


def test_triunit_rejects_wrong_mode_angle():
    spec = spec_for_hole(9)
    with pytest.raises(DomainError):
        build_triunit(spec, deg(17), 1)
    t = build_triunit(spec, spec.B / 3, 2)
    assert t.count == 3 * WedgeParams(2).pentagons


def test_rotational_counts_and_soundness():
    for n in range(3, 14):
        for depth in (1, 2):
            t = assemble_rotational(n, depth)
            assert t.count == 3 * n * depth * (depth + 1)
            assert t.mode == "rotational"
            assert t.params == {"n": n, "depth": depth}
            assert not overlapping_pairs(t)
            assert interior_sums_exact(t)


def test_rotational_center_concentration():
    t = assemble_rotational(5, 1)
    inc = build_incidence(t)
    found = False
    for pid, recs in inc.vertices.items():
        labs = sorted(lab for _, lab in recs)
        if labs == ["B"] * 5:
            found = True
    assert found


def test_hole_counts_and_soundness():
    for m in (7, 8, 11, 18, 27):
        for depth in (1, 2):
            t = assemble_hole(m, depth)
            assert t.count == m * depth * (depth + 1)
            assert t.mode == "hole"
            assert not overlapping_pairs(t)
            assert interior_sums_exact(t)


def test_hole_spec_matches_rotational_at_shared_parameters():
    t1 = assemble_hole(9, 1)
    t2 = assemble_rotational(3, 1)
    assert t1.spec.B == t2.spec.B


def test_row_tilings_cover_without_overlap():
    spec = spec_for_rotational(4)
    for flips in ((False,), (True,), (False, True), (True, False),
                  (False, False, True), (True, True, False, True)):
        t = build_row_tiling(spec, flips, 4)
        assert t.count == 2 * 4 * len(flips)
        assert not overlapping_pairs(t)
        assert interior_sums_exact(t)
    with pytest.raises(DomainError):
        build_row_tiling(spec, (), 4)
    with pytest.raises(DomainError):
        build_row_tiling(spec, (False,), 0)


def test_spiral_parameters_are_restricted():
    with pytest.raises(DomainError):
        spiral_two_fold(9, 1)
    with pytest.raises(DomainError):
        spiral_two_fold(8, 0)


def test_spiral_patches_are_sound_and_half_turn_symmetric():
    for m in (8, 10, 14):
        t = spiral_two_fold(m, 1)
        assert t.mode == "spiral"
        assert t.count % 4 == 0  # whole units, in half-turn pairs
        assert not overlapping_pairs(t)
        assert interior_sums_exact(t)


def test_spiral_arms_wrap():
    # in a genuine double spiral each arm turns through a full circuit,
    # so tiles occur in many distinct orientations; parallel rows would
    # only produce a handful
    for m, tiles in ((8, 16), (10, 20), (14, 28)):
        t = spiral_two_fold(m, 1)
        orientations = {(p.rotation.num, p.rotation.den, p.reflected)
                        for p in t.placements}
        assert len(orientations) == tiles
