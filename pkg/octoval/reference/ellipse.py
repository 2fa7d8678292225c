# This file computes the reference perimeters of the true ellipse:
# the complete elliptic integral of the second kind and Kepler's mean formula
import math
from dataclasses import dataclass
from logging import getLogger

from octoval.configuration import Configuration
from octoval.core.oval import EllipseSpec, oval_perimeter
from octoval.exceptions import InvalidRange, NonConvergence

logging = getLogger(__name__)

# the AGM converges quadratically, about 6 iterations reach machine precision
AGM_MAX_ITERATIONS = 64
MAX_TOLERANCE = 1e-6


@dataclass(frozen=True)
class EccentricityData:
    """
    c: the linear eccentricity sqrt(a^2 - b^2), the distance from center to focus
    epsilon: the eccentricity c / a, in [0, 1)
    """
    c: float
    epsilon: float


@dataclass(frozen=True)
class PerimeterReport:
    """
    The three perimeters of one ellipse; relative errors are fractions against the elliptic value
    """
    spec: EllipseSpec
    oval: float
    elliptic: float
    kepler: float
    rel_err_oval: float
    rel_err_kepler: float
    eccentricity: float

    def as_dict(self):
        return {
            'a': self.spec.a,
            'b': self.spec.b,
            'oval': self.oval,
            'elliptic': self.elliptic,
            'kepler': self.kepler,
            'eccentricity': self.eccentricity,
            'rel_err_oval': self.rel_err_oval,
            'rel_err_kepler': self.rel_err_kepler,
            'unit': 'fraction',
        }


def eccentricity(spec: EllipseSpec) -> EccentricityData:
    a, b = spec.a, spec.b
    c = math.sqrt((a - b) * (a + b))
    return EccentricityData(c=c, epsilon=c / a)


def elliptic_perimeter(spec: EllipseSpec, tol=None):
    """
    4a * E(epsilon) by the arithmetic-geometric mean with the correction sum:
    L = 2 pi / M(a, b) * (a^2 - sum 2^(n-1) c_n^2), c_0^2 = a^2 - b^2, c_(n+1) = (a_n - g_n) / 2.
    It iterates until c_n falls below tol * a
    """
    tol = Configuration.get_tolerance() if tol is None else tol
    if not (0 < tol <= MAX_TOLERANCE):
        raise InvalidRange(f"tolerance must satisfy 0 < tol <= {MAX_TOLERANCE}, got {tol}")

    a, b = spec.a, spec.b
    c_square = (a - b) * (a + b)
    correction = 0.5 * c_square
    weight = 0.5
    an, gn, c = a, b, math.sqrt(c_square)
    iterations = 0
    while c >= tol * a:
        if iterations >= AGM_MAX_ITERATIONS:
            raise NonConvergence(iterations, c / a)
        an, gn, c = (an + gn) / 2, math.sqrt(an * gn), (an - gn) / 2
        weight *= 2
        correction += weight * c * c
        iterations += 1
    logging.debug(f"AGM for a={a}, b={b} converged after {iterations} iterations")

    mean = (an + gn) / 2
    return 2 * math.pi / mean * (a * a - correction)


def kepler_perimeter(spec: EllipseSpec):
    return math.pi * (spec.a + spec.b)


def compare(spec: EllipseSpec, tol=None) -> PerimeterReport:
    oval = oval_perimeter(spec)
    elliptic = elliptic_perimeter(spec, tol)
    kepler = kepler_perimeter(spec)
    return PerimeterReport(
        spec=spec,
        oval=oval,
        elliptic=elliptic,
        kepler=kepler,
        rel_err_oval=abs(oval - elliptic) / elliptic,
        rel_err_kepler=abs(kepler - elliptic) / elliptic,
        eccentricity=eccentricity(spec).epsilon)
