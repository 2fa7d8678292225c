# This file draws the construction and the oval/ellipse overlay as SVG 1.1 text.
# The output only depends on its inputs: fixed layer order, fixed number format
import math
from dataclasses import dataclass
from logging import getLogger
from typing import Tuple

from octoval.core.arc import Arc
from octoval.core.oval import EllipseSpec, OvalConstruction, construct, full_oval
from octoval.exceptions import InvalidOptions

logging = getLogger(__name__)

LAYERS = ('ellipse', 'oval', 'osculating', 'auxiliary', 'centers', 'junctions', 'labels')
COLORS = {'major': '#d62728', 'intermediate': '#2ca02c', 'minor': '#1f77b4'}
MIN_CANVAS_PX = 64
MAX_MARGIN = 0.4
ELLIPSE_POLYGON_POINTS = 512
MARKER_PX = 3


def num(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    height_px: int = 600
    margin_fraction: float = 0.08
    layers: Tuple[str, ...] = LAYERS

    def __post_init__(self):
        for name in ('width_px', 'height_px'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < MIN_CANVAS_PX:
                raise InvalidOptions(f"{name} must be an integer >= {MIN_CANVAS_PX}, got {value!r}")
        m = self.margin_fraction
        if not isinstance(m, (int, float)) or not (0 <= m <= MAX_MARGIN):
            raise InvalidOptions(f"margin_fraction must lie in [0, {MAX_MARGIN}], got {m!r}")
        layers = tuple(self.layers)
        unknown = [layer for layer in layers if layer not in LAYERS]
        if unknown:
            raise InvalidOptions(f"unknown layer(s) {', '.join(unknown)}, choose from {', '.join(LAYERS)}")
        object.__setattr__(self, 'layers', layers)


class ViewTransform:
    """
    Maps world coordinates (y up) to pixels (y down) with one scale for both axes,
    the world box is centered in the canvas inside the margin
    """

    def __init__(self, box, opts: RenderOptions):
        x_min, y_min, x_max, y_max = box
        self.width, self.height = opts.width_px, opts.height_px
        usable_w = self.width * (1 - 2 * opts.margin_fraction)
        usable_h = self.height * (1 - 2 * opts.margin_fraction)
        span_x = (x_max - x_min) or 1.0
        span_y = (y_max - y_min) or 1.0
        self.scale = min(usable_w / span_x, usable_h / span_y)
        self.cx = (x_min + x_max) / 2
        self.cy = (y_min + y_max) / 2

    def to_px(self, point):
        return (self.width / 2 + (point[0] - self.cx) * self.scale,
                self.height / 2 - (point[1] - self.cy) * self.scale)

    def length(self, d):
        return d * self.scale


def _bounding_box(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def _header(opts):
    w, h = opts.width_px, opts.height_px
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]


def _arc_segment(arc: Arc, view: ViewTransform):
    """
    The A command from the current point to the end of the arc.
    The y flip turns a counterclockwise math arc into sweep-flag 0
    """
    x, y = view.to_px(arc.endpoint)
    rad = num(view.length(arc.radius))
    large = 1 if abs(arc.sweep) > math.pi else 0
    sweep_flag = 0 if arc.sweep > 0 else 1
    return f"A {rad} {rad} 0 {large} {sweep_flag} {num(x)} {num(y)}"


def _move_to(point, view):
    x, y = view.to_px(point)
    return f"M {num(x)} {num(y)}"


def _circle(center, radius, view, style):
    x, y = view.to_px(center)
    return f'<circle cx="{num(x)}" cy="{num(y)}" r="{num(view.length(radius))}" {style}/>'


def _marker(point, view, color):
    x, y = view.to_px(point)
    return f'<circle cx="{num(x)}" cy="{num(y)}" r="{MARKER_PX}" fill="{color}" stroke="none"/>'


def _text(point, view, label, dx=6, dy=-6):
    x, y = view.to_px(point)
    return (f'<text x="{num(x + dx)}" y="{num(y + dy)}" font-family="serif" '
            f'font-size="14" fill="black">{label}</text>')


def _ellipse(spec, view, style):
    x, y = view.to_px((0.0, 0.0))
    return (f'<ellipse cx="{num(x)}" cy="{num(y)}" rx="{num(view.length(spec.a))}" '
            f'ry="{num(view.length(spec.b))}" {style}/>')


def _group(layer, elements):
    return [f'<g id="layer-{layer}">', *elements, '</g>']


def _construction_layer(layer, c: OvalConstruction, view):
    if 'ellipse' == layer:
        return [_ellipse(c.spec, view, 'fill="none" stroke="#7f7f7f" stroke-width="1" stroke-dasharray="4 3"')]
    elif 'oval' == layer:
        if c.degenerate:
            return [_circle((0.0, 0.0), c.p, view, 'fill="none" stroke="black" stroke-width="2"')]
        return [f'<path d="{_move_to(arc.startpoint, view)} {_arc_segment(arc, view)}" '
                f'fill="none" stroke="{COLORS[arc.name]}" stroke-width="2"/>'
                for arc in full_oval(c).quarter]
    elif 'osculating' == layer:
        return [_circle(c.e, c.r, view, f'fill="none" stroke="{COLORS["minor"]}" stroke-width="0.75"'),
                _circle(c.g, c.R, view, f'fill="none" stroke="{COLORS["major"]}" stroke-width="0.75"')]
    elif 'auxiliary' == layer:
        if c.degenerate:
            return []
        style = 'fill="none" stroke="#7f7f7f" stroke-width="0.75" stroke-dasharray="2 2"'
        return [_circle(c.e, c.d_ek, view, style), _circle(c.g, c.d_gk, view, style)]
    elif 'centers' == layer:
        return [_marker(c.e, view, COLORS['minor']),
                _marker(c.g, view, COLORS['major']),
                _marker(c.k, view, COLORS['intermediate'])]
    elif 'junctions' == layer:
        if c.degenerate:
            return []
        return [_marker(c.j_gk, view, 'black'), _marker(c.j_ek, view, 'black')]
    elif 'labels' == layer:
        major, intermediate, minor = full_oval(c).quarter
        return [_text(c.e, view, 'e'), _text(c.g, view, 'g'), _text(c.k, view, 'k'),
                _text(major.midpoint, view, 'γ'),
                _text(intermediate.midpoint, view, 'β'),
                _text(minor.midpoint, view, 'δ')]
    raise InvalidOptions(f"unknown layer {layer}")


def _circle_corners(center, radius):
    return [(center[0] - radius, center[1] - radius), (center[0] + radius, center[1] + radius)]


def construction_view(c: OvalConstruction, opts: RenderOptions) -> ViewTransform:
    """The box holds the ellipse, the centers and every circle of the requested layers."""
    a, b = c.spec.a, c.spec.b
    points = [(-a, -b), (a, b), c.e, c.g, c.k]
    if 'osculating' in opts.layers:
        points += _circle_corners(c.e, c.r) + _circle_corners(c.g, c.R)
    if 'auxiliary' in opts.layers and not c.degenerate:
        points += _circle_corners(c.e, c.d_ek) + _circle_corners(c.g, c.d_gk)
    return ViewTransform(_bounding_box(points), opts)


def overlay_view(spec: EllipseSpec, opts: RenderOptions) -> ViewTransform:
    return ViewTransform((-spec.a, -spec.b, spec.a, spec.b), opts)


def render_construction(c: OvalConstruction, opts: RenderOptions = None) -> str:
    """
    The first-quadrant construction: ellipse, the three arcs, the osculating and
    auxiliary circles, the centers and junctions, and their labels
    """
    opts = opts or RenderOptions()
    a, b = c.spec.a, c.spec.b
    view = construction_view(c, opts)

    lines = _header(opts)
    for layer in LAYERS:
        if layer in opts.layers:
            lines.extend(_group(layer, _construction_layer(layer, c, view)))
    lines.append('</svg>')
    logging.debug(f"Render construction of a={a}, b={b} with layers {opts.layers}")
    return '\n'.join(lines) + '\n'


def ellipse_polygon(spec: EllipseSpec, n=ELLIPSE_POLYGON_POINTS):
    return [(spec.a * math.cos(2 * math.pi * i / n), spec.b * math.sin(2 * math.pi * i / n))
            for i in range(n)]


def render_overlay(spec: EllipseSpec, opts: RenderOptions = None) -> str:
    """
    The closed oval drawn over a sampled ellipse, only the ellipse and oval layers apply
    """
    opts = opts or RenderOptions()
    path = full_oval(construct(spec))
    view = overlay_view(spec, opts)

    lines = _header(opts)
    if 'ellipse' in opts.layers:
        points = ' '.join(f"{num(x)},{num(y)}"
                          for x, y in (view.to_px(p) for p in ellipse_polygon(spec)))
        lines.extend(_group('ellipse', [
            f'<polygon points="{points}" fill="none" stroke="#7f7f7f" stroke-width="3"/>']))
    if 'oval' in opts.layers:
        d = ' '.join([_move_to(path.arcs[0].startpoint, view)]
                     + [_arc_segment(arc, view) for arc in path.arcs] + ['Z'])
        lines.extend(_group('oval', [f'<path d="{d}" fill="none" stroke="black" stroke-width="1"/>']))
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'
