"""Plane helpers on (x, y) tuples used by the oval construction."""
from __future__ import annotations

import math
from typing import Tuple

from octoval.exceptions import DegenerateGeometry

Point = Tuple[float, float]
ORIGIN: Point = (0.0, 0.0)


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def mul(p: Point, s: float) -> Point:
    return (p[0] * s, p[1] * s)


def dot(p: Point, q: Point) -> float:
    return p[0] * q[0] + p[1] * q[1]


def cross(p: Point, q: Point) -> float:
    return p[0] * q[1] - p[1] * q[0]


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def polar(center: Point, radius: float, angle: float) -> Point:
    return (center[0] + radius * math.cos(angle),
            center[1] + radius * math.sin(angle))


def mirror_x(p: Point) -> Point:
    """Reflection across the y axis, x -> -x."""
    return (-p[0], p[1])


def mirror_y(p: Point) -> Point:
    """Reflection across the x axis, y -> -y."""
    return (p[0], -p[1])


def angle_between(u: Point, v: Point) -> float:
    """Unsigned angle in [0, pi] between two direction vectors."""
    u, v = unit(u), unit(v)
    return math.atan2(abs(cross(u, v)), dot(u, v))


def unit(p: Point) -> Point:
    length = math.hypot(p[0], p[1])
    if length == 0:
        raise DegenerateGeometry("the zero vector has no direction")
    return (p[0] / length, p[1] / length)


def collinearity(p: Point, q: Point, s: Point) -> float:
    """
    Angular deviation of s from the line through p and q, 0 for collinear points.
    Direction does not matter, the result lies in [0, pi/2]
    """
    angle = angle_between(sub(q, p), sub(s, p))
    return min(angle, math.pi - angle)


def same_side(p1: Point, p2: Point, a: Point, b: Point) -> bool:
    """True if a and b lie on the same (closed) side of the line p1 p2."""
    d = unit(sub(p2, p1))
    side_a, side_b = cross(d, sub(a, p1)), cross(d, sub(b, p1))
    return side_a == 0 or side_b == 0 or (side_a > 0) == (side_b > 0)


def circle_circle_intersections(c1: Point, r1: float, c2: Point, r2: float,
                                rel_tol: float = 1e-12, slack: float = None):
    """
    The two intersection points of circle(c1, r1) and circle(c2, r2).

    A tangency within rel_tol of the larger radius is accepted and returned
    as a doubled point; separate, contained or concentric circles raise
    DegenerateGeometry.

    slack is r1 + r2 - |c1 c2|. Callers that know it in closed form pass it,
    the height of the intersections over the center line then keeps its
    relative precision on thin triangles
    """
    d = dist(c1, c2)
    scale = max(r1, r2, d)
    if d <= rel_tol * scale:
        raise DegenerateGeometry(f"concentric circles at {c1}, no unique intersection")
    if slack is None:
        slack = r1 + r2 - d
    # twice the differences between the semi-perimeter and each side
    factors = (slack, d - r1 + r2, d + r1 - r2)
    if min(factors) < -rel_tol * scale:
        raise DegenerateGeometry(
            f"circles ({c1}, {r1}) and ({c2}, {r2}) do not intersect")
    slack, far, near = (max(f, 0.0) for f in factors)
    semi = d + slack / 2
    # Heron, as a product of square roots so that nothing is squared
    h = math.sqrt(semi) * math.sqrt(slack / 2) / d * math.sqrt(far) * math.sqrt(near)
    # distance from c1 to the radical line, along c1 -> c2
    x = (d + (r1 - r2) * ((r1 + r2) / d)) / 2
    ux, uy = (c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d
    base = (c1[0] + x * ux, c1[1] + x * uy)
    return ((base[0] - h * uy, base[1] + h * ux),
            (base[0] + h * uy, base[1] - h * ux))
