"""Exact angle arithmetic in rational degrees.

All angle bookkeeping in this package is done with rational numbers of
degrees so that quantities like 360/n stay exact under addition and
comparison.  Only the final conversion to radians (for trig) rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering


@total_ordering
class ExactAngle:
    """An angle stored as an exact rational number of degrees."""

    __slots__ = ("_deg",)

    def __init__(self, num, den=1):
        if isinstance(num, ExactAngle):
            self._deg = num._deg * Fraction(den) if den != 1 else num._deg
            return
        self._deg = Fraction(num, den)

    @property
    def degrees(self) -> Fraction:
        return self._deg

    @property
    def num(self) -> int:
        return self._deg.numerator

    @property
    def den(self) -> int:
        return self._deg.denominator

    def __add__(self, other: "ExactAngle") -> "ExactAngle":
        return ExactAngle(self._deg + other._deg)

    def __sub__(self, other: "ExactAngle") -> "ExactAngle":
        return ExactAngle(self._deg - other._deg)

    def __neg__(self) -> "ExactAngle":
        return ExactAngle(-self._deg)

    def __mul__(self, k) -> "ExactAngle":
        return ExactAngle(self._deg * Fraction(k))

    __rmul__ = __mul__

    def __truediv__(self, k) -> "ExactAngle":
        return ExactAngle(self._deg / Fraction(k))

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactAngle):
            return self._deg == other._deg
        if isinstance(other, (int, Fraction)):
            return self._deg == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, ExactAngle):
            return self._deg < other._deg
        if isinstance(other, (int, Fraction)):
            return self._deg < other
        return NotImplemented

    def __hash__(self):
        return hash(self._deg)

    def __repr__(self):
        return f"ExactAngle({self._deg.numerator}/{self._deg.denominator})"

    def mod360(self) -> "ExactAngle":
        return ExactAngle(self._deg % 360)

    def mod180(self) -> "ExactAngle":
        return ExactAngle(self._deg % 180)

    @property
    def radians(self) -> float:
        return math.radians(float(self._deg))

    def sin(self) -> float:
        return math.sin(self.radians)

    def cos(self) -> float:
        return math.cos(self.radians)


def deg(num, den=1) -> ExactAngle:
    """Shorthand constructor for an exact angle in degrees."""
    return ExactAngle(num, den)


DEG_0 = deg(0)
DEG_180 = deg(180)
DEG_360 = deg(360)
