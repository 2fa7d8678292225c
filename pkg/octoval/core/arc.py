import math
from dataclasses import dataclass
from typing import Tuple

from octoval.core.geometry import Point, dist, polar


@dataclass(frozen=True)
class Arc:
    """
    One circular arc of the oval

    Properties:
        center: the center of the arc's circle
        radius: the radius, always positive
        start: the angle of the start point seen from center, radians from +x
        sweep: the signed central angle, positive is counterclockwise
        name: which circle the arc belongs to, 'major', 'intermediate' or 'minor'
    """
    center: Point
    radius: float
    start: float
    sweep: float
    name: str = ''

    def __post_init__(self):
        assert self.radius > 0, f"arc radius must be positive, got {self.radius}"
        assert abs(self.sweep) <= 2 * math.pi, f"arc sweep {self.sweep} exceeds a full turn"

    @property
    def end(self):
        return self.start + self.sweep

    @property
    def startpoint(self) -> Point:
        return polar(self.center, self.radius, self.start)

    @property
    def endpoint(self) -> Point:
        return polar(self.center, self.radius, self.start + self.sweep)

    @property
    def midpoint(self) -> Point:
        return self.point_at(0.5)

    @property
    def length(self):
        return self.radius * abs(self.sweep)

    def point_at(self, t):
        return polar(self.center, self.radius, self.start + t * self.sweep)

    def as_dict(self):
        return {'name': self.name, 'center': list(self.center), 'radius': self.radius,
                'start': self.start, 'sweep': self.sweep}

    def __str__(self):
        return str(self.as_dict())


@dataclass(frozen=True)
class OvalPath:
    """
    The arc decomposition of the eight-centered oval

    Properties:
        arcs: the 8 arcs of the closed oval, counterclockwise, each one starts where the previous ends
        quarter: the 3 arcs of the first quadrant, from (0, b) clockwise to (a, 0)
    """
    arcs: Tuple[Arc, ...]
    quarter: Tuple[Arc, ...]

    @property
    def length(self):
        return math.fsum(arc.length for arc in self.arcs)

    @property
    def total_sweep(self):
        return math.fsum(abs(arc.sweep) for arc in self.arcs)

    def centers(self):
        return [arc.center for arc in self.arcs]

    def gaps(self):
        """
        Distances between each arc's endpoint and the next arc's startpoint,
        the last one measures the closure of the path
        """
        n = len(self.arcs)
        return [dist(self.arcs[i].endpoint, self.arcs[(i + 1) % n].startpoint)
                for i in range(n)]

    def as_dict(self):
        return {'arcs': [arc.as_dict() for arc in self.arcs],
                'quarter': [arc.as_dict() for arc in self.quarter]}
