from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from pentarose.angles import ExactAngle, deg

rationals = st.fractions(
    min_value=Fraction(-10000), max_value=Fraction(10000),
    max_denominator=997)


def test_construction_forms():
    assert deg(360, 7).degrees == Fraction(360, 7)
    assert ExactAngle(Fraction(1, 3)).degrees == Fraction(1, 3)
    assert deg(90) == 90
    assert deg(90) == Fraction(90)


def test_mod360_range():
    assert deg(-30).mod360() == deg(330)
    assert deg(725).mod360() == deg(5)
    assert deg(360).mod360() == deg(0)


@given(rationals, rationals)
def test_addition_is_exact(a, b):
    assert (deg(a) + deg(b)).degrees == a + b
    assert (deg(a) - deg(b)).degrees == a - b


@given(rationals)
def test_scaling_round_trips(a):
    x = deg(a)
    assert (x * 3 / 3) == x
    assert (-(-x)) == x


@given(rationals)
def test_mod360_is_idempotent_and_congruent(a):
    x = deg(a).mod360()
    assert Fraction(0) <= x.degrees < 360
    assert (x.degrees - a) % 360 == 0
    assert x.mod360() == x


def test_ordering_and_hash():
    assert deg(1, 3) < deg(1, 2) < deg(1)
    assert len({deg(120), deg(360, 3), deg(240, 2)}) == 1


def test_trig_matches_float_math():
    import math
    assert abs(deg(60).cos() - 0.5) < 1e-15
    assert abs(deg(90).sin() - 1.0) < 1e-15
    assert abs(deg(360, 7).radians - 2 * math.pi / 7) < 1e-15
