# This file measures how far the oval strays from the ellipse along rays from the center
import math
import numbers
from dataclasses import dataclass
from logging import getLogger

import numpy as np

from octoval.configuration import Configuration
from octoval.core.oval import EllipseSpec, construct
from octoval.exceptions import InvalidRange

logging = getLogger(__name__)

MIN_SAMPLES = 16


@dataclass(frozen=True)
class DeviationReport:
    spec: EllipseSpec
    max_radial_dev: float
    argmax_angle: float
    samples: int

    def as_dict(self):
        return {'a': self.spec.a, 'b': self.spec.b, 'max_radial_dev': self.max_radial_dev,
                'argmax_angle': self.argmax_angle, 'samples': self.samples}


def ellipse_radius(spec: EllipseSpec, phi):
    return spec.a * spec.b / np.hypot(spec.b * np.cos(phi), spec.a * np.sin(phi))


def oval_radius(c, phi):
    """
    The distance from the origin to the oval along the polar angles phi in [0, pi/2].
    Each ray hits the arc whose span, seen from the origin, contains it;
    the arcs are the outer side of their circles, so the far root is taken
    """
    if c.degenerate:
        return np.full_like(phi, c.p)

    phi_ek = math.atan2(c.j_ek[1], c.j_ek[0])
    phi_gk = math.atan2(c.j_gk[1], c.j_gk[0])
    conditions = [phi <= phi_ek, phi <= phi_gk]
    cx = np.select(conditions, [c.e[0], c.k[0]], c.g[0])
    cy = np.select(conditions, [c.e[1], c.k[1]], c.g[1])
    rho = np.select(conditions, [c.r, c.p], c.R)

    uc = np.cos(phi) * cx + np.sin(phi) * cy
    discriminant = np.maximum(uc * uc - (cx * cx + cy * cy) + rho * rho, 0.0)
    return uc + np.sqrt(discriminant)


def radial_deviation(spec: EllipseSpec, samples=None) -> DeviationReport:
    samples = Configuration.get_samples() if samples is None else samples
    if isinstance(samples, bool) or not isinstance(samples, numbers.Integral) or samples < MIN_SAMPLES:
        raise InvalidRange(f"samples must be an integer >= {MIN_SAMPLES}, got {samples!r}")
    samples = int(samples)

    # by symmetry the first quadrant suffices
    phi = np.linspace(0.0, math.pi / 2, samples)
    gap = np.abs(oval_radius(construct(spec), phi) - ellipse_radius(spec, phi))
    index = int(np.argmax(gap))
    logging.debug(f"Radial deviation of a={spec.a}, b={spec.b}: {gap[index]} at {phi[index]}")
    return DeviationReport(spec=spec, max_radial_dev=float(gap[index]),
                           argmax_angle=float(phi[index]), samples=samples)
