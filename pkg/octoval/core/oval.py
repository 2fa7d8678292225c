# This file constructs the eight-centered oval of an ellipse:
# the three circles of a quarter (major at g, intermediate at k, minor at e),
# their central angles, the 8-arc decomposition and the perimeter
import math
from dataclasses import dataclass
from logging import getLogger

from octoval.core.arc import Arc, OvalPath
from octoval.core.geometry import (ORIGIN, Point, add, angle_between,
                                   circle_circle_intersections, dist,
                                   mirror_x, mirror_y, mul, polar, same_side,
                                   sub, unit)
from octoval.exceptions import DegenerateGeometry, InvalidAxes

logging = getLogger(__name__)

# arcsine arguments this close to +-1 are rounding, anything further is a bug
CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class EllipseSpec:
    """
    The semi-axes of the ellipse, the sole input of every construction

    Properties:
        a: the semi-major axis
        b: the semi-minor axis, 0 < b <= a
        swapped: True if the user gave the axes in the other order, see normalize_axes
    """
    a: float
    b: float
    swapped: bool = False

    def __post_init__(self):
        for name in ('a', 'b'):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise InvalidAxes(f"semi-axis {name} must be a number, got {value!r}")
            if not math.isfinite(value):
                raise InvalidAxes(f"semi-axis {name} must be finite, got {value}")
            if value <= 0:
                raise InvalidAxes(f"semi-axis {name} must be positive, got {value}")
            object.__setattr__(self, name, value)
        if self.a < self.b:
            raise InvalidAxes(
                f"semi-axes must satisfy a >= b, got a={self.a}, b={self.b}")

    @property
    def ratio(self):
        return self.a / self.b

    @property
    def is_circle(self):
        return self.a == self.b

    def scaled(self, s):
        return EllipseSpec(self.a * s, self.b * s, self.swapped)


def normalize_axes(a, b):
    """
    Accept the axes in any order, the construction itself always works with a >= b.
    The returned spec records whether the axes were swapped
    """
    try:
        a, b = float(a), float(b)
    except (TypeError, ValueError):
        raise InvalidAxes(f"semi-axes must be numbers, got {a!r} and {b!r}")
    if a < b:
        logging.warning(f"Swap the semi-axes: a={a} < b={b}, use a={b}, b={a}")
        return EllipseSpec(b, a, swapped=True)
    return EllipseSpec(a, b)


@dataclass(frozen=True)
class OvalConstruction:
    """
    The centers, radii and angles of the eight-centered oval.

    Properties:
        spec: the ellipse
        r: radius of the minor circle, the osculating circle at (a, 0)
        R: radius of the major circle, the osculating circle at (0, b)
        p: radius of the intermediate circle, the mean of the semi-axes
        e: center of the minor circle
        g: center of the major circle
        k: center of the intermediate circle
        d_ek: radius of the auxiliary circle around e, p - r
        d_gk: radius of the auxiliary circle around g, R - p
        d_ge: the hypotenuse of the right triangle (g, e, o)
        gamma, beta, delta: central angles of the major, intermediate and minor arcs
        j_gk: where the major arc meets the intermediate arc
        j_ek: where the intermediate arc meets the minor arc
    """
    spec: EllipseSpec
    r: float
    R: float
    p: float
    e: Point
    g: Point
    k: Point
    d_ek: float
    d_gk: float
    d_ge: float
    gamma: float
    beta: float
    delta: float
    j_gk: Point
    j_ek: Point

    @property
    def degenerate(self):
        return self.spec.is_circle

    def as_dict(self):
        return {
            'a': self.spec.a, 'b': self.spec.b, 'swapped': self.spec.swapped,
            'r': self.r, 'p': self.p, 'R': self.R,
            'e': list(self.e), 'g': list(self.g), 'k': list(self.k),
            'd_ek': self.d_ek, 'd_gk': self.d_gk, 'd_ge': self.d_ge,
            'gamma': self.gamma, 'beta': self.beta, 'delta': self.delta,
            'j_gk': list(self.j_gk), 'j_ek': list(self.j_ek),
            'degenerate': self.degenerate,
        }


@dataclass(frozen=True)
class TriangleDiagnostics:
    """
    The angles of the triangles (g, e, k) and (g, e, o) met while solving for the arcs.

    Properties:
        alpha_prime: at g in triangle gek, law of cosines
        alpha: at e in triangle gek, law of sines
        beta_interior: at k in triangle gek, law of cosines
        theta: at g in the right triangle geo
        theta_prime: at e in the right triangle geo
        degenerate: True for a circle, the angles are then the limits for b -> a
    """
    alpha_prime: float
    alpha: float
    beta_interior: float
    theta: float
    theta_prime: float
    degenerate: bool = False


def _asin(x, what):
    if x > 1.0 or x < -1.0:
        if abs(x) - 1.0 > CLAMP_TOL:
            raise DegenerateGeometry(f"sine of {what} is {x!r}, outside [-1, 1]")
        logging.warning(f"Clamp the sine of {what} from {x!r}")
        x = math.copysign(1.0, x)
    return math.asin(x)


def _acos(x, what):
    if x > 1.0 or x < -1.0:
        if abs(x) - 1.0 > CLAMP_TOL:
            raise DegenerateGeometry(f"cosine of {what} is {x!r}, outside [-1, 1]")
        logging.warning(f"Clamp the cosine of {what} from {x!r}")
        x = math.copysign(1.0, x)
    return math.acos(x)


# The closed forms below take the raw semi-axes without validation,
# so that their symmetry under a <-> b can be checked directly.
# They only depend on q = a/b, which keeps a^2 and 2ab out of range trouble

def sin_gamma(a, b):
    q = a / b
    s = math.sqrt(2 * q)
    return (2 * q + 1 + s) / ((2 * q + 1) * (q + 1 + s))


def sin_beta(a, b):
    q = a / b
    s = math.sqrt(2 * q)
    return 2 * (q + 1) * s / ((q + 2) * (2 * q + 1))


def sin_delta(a, b):
    q = a / b
    s = math.sqrt(2 * q)
    return q / (q + 2) * (q + 2 + s) / (q + 1 + s)


def sin_alpha_prime(a, b):
    q = a / b
    return math.sqrt(2 * q) / ((2 * q + 1) * math.hypot(q, 1))


def sin_alpha(a, b):
    q = a / b
    return q / (q + 2) * math.sqrt(2 * q) / math.hypot(q, 1)


def sin_theta(a, b):
    return b / math.hypot(a, b)


def central_sines(spec: EllipseSpec):
    """The sines of (gamma, beta, delta)."""
    return sin_gamma(spec.a, spec.b), sin_beta(spec.a, spec.b), sin_delta(spec.a, spec.b)


def central_angles(spec: EllipseSpec):
    """
    The central angles (gamma, beta, delta) of the major, intermediate and minor arcs,
    each in (0, pi/2], from their closed-form sines
    """
    s_gamma, s_beta, s_delta = central_sines(spec)
    return _asin(s_gamma, 'gamma'), _asin(s_beta, 'beta'), _asin(s_delta, 'delta')


def construct(spec: EllipseSpec) -> OvalConstruction:
    a, b = spec.a, spec.b
    # every length below is written with the ratios q = a/b and t = b/a
    q, t = a / b, b / a
    r = b * t
    R = a * q
    p = a / 2 + b / 2
    gamma, beta, delta = central_angles(spec)

    if spec.is_circle:
        # every auxiliary length vanishes and the three circles coincide
        logging.debug(f"Degenerate construction, circle of radius {a}")
        return OvalConstruction(
            spec=spec, r=r, R=R, p=p, e=ORIGIN, g=ORIGIN, k=ORIGIN,
            d_ek=0.0, d_gk=0.0, d_ge=0.0,
            gamma=gamma, beta=beta, delta=delta,
            j_gk=polar(ORIGIN, p, math.pi / 2 - gamma),
            j_ek=polar(ORIGIN, p, delta))

    # factored forms keep full relative precision when a is close to b
    diff = a - b
    root = math.hypot(1.0, t)
    e = (diff * (1 + t), 0.0)
    g = (0.0, -diff * (q + 1))
    d_ek = diff * (1 + 2 * t) / 2
    d_gk = diff * (2 * q + 1) / 2
    d_ge = diff * (q + 1) * root
    # d_ek + d_gk - d_ge, the triangle gek flattens as a/b grows
    slack = diff * t / (1 + t + t * t + (1 + t) * root)

    k1, k2 = circle_circle_intersections(e, d_ek, g, d_gk, slack=slack)
    # the branch on the origin side of (g, e) gives the arc hugging the quadrant
    k = k1 if same_side(g, e, k1, ORIGIN) else k2

    # the junctions lie on the center lines, at r from e and at p from k
    j_ek = add(e, mul(unit(sub(e, k)), r))
    j_gk = add(k, mul(unit(sub(k, g)), p))
    logging.debug(f"Construct a={a}, b={b}: e={e}, g={g}, k={k}")

    return OvalConstruction(
        spec=spec, r=r, R=R, p=p, e=e, g=g, k=k,
        d_ek=d_ek, d_gk=d_gk, d_ge=d_ge,
        gamma=gamma, beta=beta, delta=delta, j_gk=j_gk, j_ek=j_ek)


def angles_geometric(c: OvalConstruction):
    """
    Measure (gamma, beta, delta) on the coordinates of the construction and solve
    the triangles (g, e, k) and (g, e, o) along the way:
    gamma = theta - alpha_prime, delta = theta_prime - alpha.

    The central angles are read from the center lines g -> k and k -> e, which carry
    the junctions; the minor radius r is tiny next to the coordinates when a >> b.
    It is independent of the closed forms, so the two act as each other's oracle.
    For a circle the triangles collapse to a point; the closed-form split is
    returned with the limiting triangle angles, flagged as degenerate
    """
    if c.degenerate:
        alpha = math.asin(1 / 3)
        diagnostics = TriangleDiagnostics(
            alpha_prime=alpha, alpha=alpha, beta_interior=math.pi - 2 * alpha,
            theta=math.pi / 4, theta_prime=math.pi / 4, degenerate=True)
        return c.gamma, c.beta, c.delta, diagnostics

    e, g, k = c.e, c.g, c.k
    major = unit(sub(k, g))
    minor = unit(sub(e, k))
    gamma = angle_between((0.0, 1.0), major)
    delta = angle_between((1.0, 0.0), minor)
    beta = angle_between(major, minor)

    ge, gk, ek = dist(g, e), dist(g, k), dist(e, k)
    # laws of cosines divided through by the two adjacent sides
    alpha_prime = _acos((ge / gk + gk / ge - (ek / ge) * (ek / gk)) / 2, 'alpha_prime')
    alpha = _asin(gk / ek * math.sin(alpha_prime), 'alpha')
    beta_interior = _acos((gk / ek + ek / gk - (ge / gk) * (ge / ek)) / 2, 'beta_interior')
    # legs of the right triangle: |oe| and |og|
    theta = math.atan2(abs(e[0]), abs(g[1]))
    theta_prime = math.atan2(abs(g[1]), abs(e[0]))

    diagnostics = TriangleDiagnostics(
        alpha_prime=alpha_prime, alpha=alpha, beta_interior=beta_interior,
        theta=theta, theta_prime=theta_prime)
    return gamma, beta, delta, diagnostics


def full_oval(c: OvalConstruction) -> OvalPath:
    """
    Decompose the oval into arcs. The first quadrant is drawn from (0, b) to (a, 0),
    the other three quarters follow by symmetry; the closed path runs
    counterclockwise from the lower end of the right minor arc
    """
    r, R, p = c.r, c.R, c.p
    gamma, beta, delta = c.gamma, c.beta, c.delta
    e, g, k = c.e, c.g, c.k
    half_pi = math.pi / 2

    quarter = (
        Arc(g, R, half_pi, -gamma, 'major'),
        Arc(k, p, half_pi - gamma, -beta, 'intermediate'),
        Arc(e, r, delta, -delta, 'minor'),
    )
    arcs = (
        Arc(e, r, -delta, 2 * delta, 'minor'),
        Arc(k, p, delta, beta, 'intermediate'),
        Arc(g, R, half_pi - gamma, 2 * gamma, 'major'),
        Arc(mirror_x(k), p, half_pi + gamma, beta, 'intermediate'),
        Arc(mirror_x(e), r, math.pi - delta, 2 * delta, 'minor'),
        Arc(mirror_x(mirror_y(k)), p, math.pi + delta, beta, 'intermediate'),
        Arc(mirror_y(g), R, 3 * half_pi - gamma, 2 * gamma, 'major'),
        Arc(mirror_y(k), p, 3 * half_pi + gamma, beta, 'intermediate'),
    )
    return OvalPath(arcs=arcs, quarter=quarter)


def oval_perimeter(spec: EllipseSpec):
    """
    The perimeter of the eight-centered oval,
    4 * (gamma * a^2/b + beta * (a+b)/2 + delta * b^2/a)
    """
    a, b = spec.a, spec.b
    gamma, beta, delta = central_angles(spec)
    return 4 * math.fsum((gamma * a * (a / b), beta * (a / 2 + b / 2), delta * b * (b / a)))
