"""Planar isometries with an exact rotation component.

An isometry acts on a point as  p -> R(theta) * M * p + t  where M is a
reflection across the x axis when the reflected flag is set.  The
rotation angle is kept as an exact rational number of degrees so that
composing placements never accumulates floating-point rotation error;
only translations live in floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .angles import ExactAngle, deg

Point = Tuple[float, float]


@dataclass(frozen=True)
class Isometry:
    rotation: ExactAngle  # in [0, 360)
    tx: float = 0.0
    ty: float = 0.0
    reflected: bool = False

    def apply(self, p: Point) -> Point:
        x, y = p
        if self.reflected:
            y = -y
        c, s = self.rotation.cos(), self.rotation.sin()
        return (c * x - s * y + self.tx, s * x + c * y + self.ty)

    def apply_all(self, pts):
        return tuple(self.apply(p) for p in pts)

    def direction(self, heading: ExactAngle) -> ExactAngle:
        """Exact heading of a direction vector after this isometry."""
        if self.reflected:
            return (self.rotation - heading).mod360()
        return (self.rotation + heading).mod360()


IDENTITY = Isometry(rotation=deg(0))


def compose(t1: Isometry, t2: Isometry) -> Isometry:
    """The isometry acting as t1 after t2 (t1 o t2)."""
    sign = -1 if t1.reflected else 1
    rot = (t1.rotation + sign * t2.rotation).mod360()
    x, y = t2.tx, t2.ty
    if t1.reflected:
        y = -y
    c, s = t1.rotation.cos(), t1.rotation.sin()
    return Isometry(rotation=rot,
                    tx=c * x - s * y + t1.tx,
                    ty=s * x + c * y + t1.ty,
                    reflected=t1.reflected != t2.reflected)


def inverse(t: Isometry) -> Isometry:
    if t.reflected:
        # (R(th) M)^-1 = M R(-th) = R(th) M, so the rotation is unchanged
        # and the translation becomes -R(th) M t.
        rot = t.rotation
        c, s = rot.cos(), rot.sin()
        x, y = t.tx, -t.ty
        return Isometry(rotation=rot, tx=-(c * x - s * y), ty=-(s * x + c * y),
                        reflected=True)
    rot = (-t.rotation).mod360()
    c, s = rot.cos(), rot.sin()
    return Isometry(rotation=rot,
                    tx=-(c * t.tx - s * t.ty), ty=-(s * t.tx + c * t.ty),
                    reflected=False)


def rotation_about(center: Point, angle: ExactAngle) -> Isometry:
    """Rotation by an exact angle about an arbitrary point."""
    c, s = angle.cos(), angle.sin()
    cx, cy = center
    return Isometry(rotation=angle.mod360(),
                    tx=cx - (c * cx - s * cy),
                    ty=cy - (s * cx + c * cy))


def reflection_about(center: Point, axis_angle: ExactAngle) -> Isometry:
    """Reflection across the line through center at the given heading."""
    rot = (axis_angle * 2).mod360()
    c, s = rot.cos(), rot.sin()
    cx, cy = center
    return Isometry(rotation=rot,
                    tx=cx - (c * cx + s * cy),
                    ty=cy - (s * cx - c * cy),
                    reflected=True)
