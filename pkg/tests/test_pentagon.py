import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentarose.angles import deg
from pentarose.pentagon import (DomainError, angles_from_B, realize,
                                reflect_to_octa, spec_for_hole,
                                spec_for_rotational, polygon_signed_area)

b_values = st.fractions(min_value=Fraction(1, 100),
                        max_value=Fraction(17999, 100),
                        max_denominator=499)


@given(b_values)
def test_angle_relations_hold_exactly(b):
    s = angles_from_B(deg(b))
    assert s.A + s.B + s.C == deg(360)
    assert s.C == s.D * 2
    assert s.D + s.E == deg(180)
    assert s.A + s.B + s.C + s.D + s.E == deg(540)


@given(b_values)
def test_realized_pentagon_is_convex_and_closed(b):
    g = realize(angles_from_B(deg(b)))
    # convexity: every cross product of consecutive edges is positive
    v = g.vertices
    for i in range(5):
        ax, ay = v[(i + 1) % 5][0] - v[i][0], v[(i + 1) % 5][1] - v[i][1]
        bx, by = v[(i + 2) % 5][0] - v[(i + 1) % 5][0], \
            v[(i + 2) % 5][1] - v[(i + 1) % 5][1]
        assert ax * by - ay * bx > 0
    assert g.signed_area > 0


@given(b_values)
def test_odd_edge_length_from_coordinates(b):
    # oracle: |DE| measured on the realized polygon, independent of the
    # closed-form 2*sin(B/2) used by the spec
    s = angles_from_B(deg(b))
    g = realize(s)
    d, e = g.vertex("D"), g.vertex("E")
    measured = math.hypot(e[0] - d[0], e[1] - d[1])
    assert abs(measured - s.e) < 1e-9
    assert abs(s.e - 2 * math.sin(math.radians(float(b)) / 2)) < 1e-15


@given(b_values)
def test_interior_angles_match_realization(b):
    # oracle: angles measured from coordinates agree with the spec
    g = realize(angles_from_B(deg(b)))
    v = g.vertices
    for i, lab in enumerate("ABCDE"):
        p, q, r = v[(i - 1) % 5], v[i], v[(i + 1) % 5]
        a1 = math.atan2(p[1] - q[1], p[0] - q[0])
        a2 = math.atan2(r[1] - q[1], r[0] - q[0])
        ang = math.degrees((a1 - a2) % (2 * math.pi))
        assert abs(ang - float(g.spec.angle(lab).degrees)) < 1e-9


def test_domain_errors():
    with pytest.raises(DomainError):
        angles_from_B(deg(0))
    with pytest.raises(DomainError):
        angles_from_B(deg(180))
    with pytest.raises(DomainError):
        spec_for_rotational(2)
    with pytest.raises(DomainError):
        spec_for_hole(6)


def test_hole_and_rotational_specs_coincide_when_m_is_3n():
    for n in range(3, 10):
        assert spec_for_hole(3 * n).B == spec_for_rotational(n).B


def test_edge_matching_rules():
    s = spec_for_rotational(5)
    assert s.edges_match("AB", "EA")
    assert not s.edges_match("AB", "DE")
    assert s.edges_match("DE", "DE")
    # B = 60 makes all five edges unit
    s6 = spec_for_rotational(6)
    assert s6.edges_match("AB", "DE")
    assert s6.e == pytest.approx(1.0)


def test_exact_edge_headings_match_coordinates():
    s = spec_for_hole(11)
    g = realize(s)
    for edge in ("AB", "BC", "CD", "DE", "EA"):
        p, q = g.edge(edge)
        measured = math.degrees(math.atan2(q[1] - p[1], q[0] - p[0])) % 360
        assert abs(measured - float(s.edge_direction(edge).degrees)) < 1e-9


def test_octa_unit_is_equilateral_with_one_reflex_vertex():
    g = realize(spec_for_hole(9))
    octa = reflect_to_octa(g)
    ring = octa.boundary()
    lengths = [math.hypot(ring[(i + 1) % 8][0] - ring[i][0],
                          ring[(i + 1) % 8][1] - ring[i][1])
               for i in range(8)]
    assert all(abs(length - 1.0) < 1e-9 for length in lengths)
    assert polygon_signed_area(ring) > 0
    reflex = 0
    for i in range(8):
        ax, ay = ring[(i + 1) % 8][0] - ring[i][0], \
            ring[(i + 1) % 8][1] - ring[i][1]
        bx, by = ring[(i + 2) % 8][0] - ring[(i + 1) % 8][0], \
            ring[(i + 2) % 8][1] - ring[(i + 1) % 8][1]
        if ax * by - ay * bx < 0:
            reflex += 1
    assert reflex == 1
