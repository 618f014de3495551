"""Convex polygon clipping (Sutherland-Hodgman) and areas."""

from __future__ import annotations

from .pentagon import polygon_signed_area


def ccw(poly):
    """Return the polygon with counterclockwise orientation."""
    return poly if polygon_signed_area(poly) >= 0 else tuple(reversed(poly))


def clip_convex(subject, clipper):
    """Intersection of two convex polygons, both given counterclockwise."""
    output = list(subject)
    n = len(clipper)
    for i in range(n):
        if not output:
            return []
        ax, ay = clipper[i]
        bx, by = clipper[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        inp = output
        output = []
        px, py = inp[-1]
        # inside = left of (or on) the directed clip edge
        p_side = ex * (py - ay) - ey * (px - ax)
        for qx, qy in inp:
            q_side = ex * (qy - ay) - ey * (qx - ax)
            if q_side >= 0.0:
                if p_side < 0.0:
                    t = p_side / (p_side - q_side)
                    output.append((px + t * (qx - px), py + t * (qy - py)))
                output.append((qx, qy))
            elif p_side >= 0.0:
                t = p_side / (p_side - q_side)
                output.append((px + t * (qx - px), py + t * (qy - py)))
            px, py, p_side = qx, qy, q_side
    return output


def intersection_area(poly1, poly2) -> float:
    """Area of the intersection of two convex polygons (any orientation)."""
    region = clip_convex(ccw(poly1), ccw(poly2))
    if len(region) < 3:
        return 0.0
    return abs(polygon_signed_area(region))


def bbox(poly):
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def bboxes_overlap(b1, b2, pad=0.0) -> bool:
    return (b1[0] <= b2[2] + pad and b2[0] <= b1[2] + pad
            and b1[1] <= b2[3] + pad and b2[1] <= b1[3] + pad)
