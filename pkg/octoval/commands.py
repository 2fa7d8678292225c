# This file implements the sub-commands of launcher.py.
# Each command prints its result on stdout and returns the exit code,
# input errors are raised and mapped to exit codes by the launcher
import json
import math
import sys
from enum import Enum

from octoval.analysis.deviation import radial_deviation
from octoval.analysis.sweep import sweep
from octoval.configuration import Configuration, bcolors
from octoval.core.bounds import prove_sine_bounds
from octoval.core.geometry import collinearity, dist
from octoval.core.oval import (EllipseSpec, angles_geometric, construct,
                               full_oval, normalize_axes, oval_perimeter)
from octoval.exceptions import (EXIT_CHECK_FAILED, EXIT_OK, InvalidOptions)
from octoval.reference.ellipse import compare
from octoval.render.svg import RenderOptions, render_construction, render_overlay
from octoval.utils import fmt_point, log_in_out, rad_deg, sig, write_result

# the bound on the perimeter error over a, b in [1, 10]
SWEEP_BOUND_PERCENT = 0.029


class OutputFormat(str, Enum):
    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'


def _output_format(args, allowed):
    fmt = OutputFormat(args.format) if args.format else allowed[0]
    if fmt not in allowed:
        raise InvalidOptions(
            f"{args.command} supports --format {' or '.join(f.value for f in allowed)}, got {fmt.value}")
    return fmt


def _paint(text, color):
    if sys.stdout.isatty():
        return f"{color}{text}{bcolors.ENDC}"
    return text


def _print_json(data):
    print(json.dumps(data, indent=4))


@log_in_out("cmd_params", "commands")
def cmd_params(args):
    spec = normalize_axes(args.a, args.b)
    c = construct(spec)
    if OutputFormat.JSON == _output_format(args, (OutputFormat.TEXT, OutputFormat.JSON)):
        _print_json(c.as_dict())
        return EXIT_OK

    if spec.swapped:
        print(f"note: a < b, the semi-axes are swapped to a = {sig(spec.a)}, b = {sig(spec.b)}")
    print(f"a     = {sig(spec.a)}")
    print(f"b     = {sig(spec.b)}")
    print(f"r     = {sig(c.r)}")
    print(f"p     = {sig(c.p)}")
    print(f"R     = {sig(c.R)}")
    print(f"e     = {fmt_point(c.e)}")
    print(f"g     = {fmt_point(c.g)}")
    print(f"k     = {fmt_point(c.k)}")
    print(f"gamma = {rad_deg(c.gamma)}")
    print(f"beta  = {rad_deg(c.beta)}")
    print(f"delta = {rad_deg(c.delta)}")
    if c.degenerate:
        print(f"note: a = b, the oval degenerates to the circle of radius {sig(spec.a)}")
    return EXIT_OK


@log_in_out("cmd_perimeter", "commands")
def cmd_perimeter(args):
    spec = normalize_axes(args.a, args.b)
    report = compare(spec)
    deviation = radial_deviation(spec, args.samples)
    if OutputFormat.JSON == _output_format(args, (OutputFormat.TEXT, OutputFormat.JSON)):
        data = report.as_dict()
        data['max_radial_dev'] = deviation.max_radial_dev
        data['argmax_angle'] = deviation.argmax_angle
        data['samples'] = deviation.samples
        _print_json(data)
        return EXIT_OK

    if spec.swapped:
        print(f"note: a < b, the semi-axes are swapped to a = {sig(spec.a)}, b = {sig(spec.b)}")
    print(f"oval perimeter     = {sig(report.oval)}")
    print(f"elliptic perimeter = {sig(report.elliptic)}")
    print(f"kepler perimeter   = {sig(report.kepler)}")
    print(f"eccentricity       = {sig(report.eccentricity, 4)}")
    print(f"rel err oval       = {sig(report.rel_err_oval * 100)} %")
    print(f"rel err kepler     = {sig(report.rel_err_kepler * 100)} %")
    print(f"max radial dev     = {sig(deviation.max_radial_dev)} at {rad_deg(deviation.argmax_angle)}")
    return EXIT_OK


@log_in_out("cmd_sweep", "commands")
def cmd_sweep(args):
    fmt = _output_format(args, (OutputFormat.CSV, OutputFormat.JSON))
    step = args.step_pos if args.step_pos is not None else args.step
    grid = sweep((args.a_min, args.a_max), (args.b_min, args.b_max), step, args.workers)

    if OutputFormat.CSV == fmt:
        content = grid.to_csv()
    else:
        content = json.dumps(grid.as_dict(), indent=4) + '\n'
    out = args.out or Configuration.default_result_path('sweep', fmt.value)
    write_result(out, content)

    max_percent = grid.max_err * 100
    print(f"cells       = {len(grid.cells)}")
    if not grid.cells:
        print("no cells with b <= a in the given ranges")
    else:
        a, b = grid.argmax_cell
        print(f"max rel err = {sig(max_percent)} % at (a, b) = ({sig(a)}, {sig(b)})")
        bound = '<' if max_percent < SWEEP_BOUND_PERCENT else '>='
        print(f"max rel err {bound} {SWEEP_BOUND_PERCENT}%")
    print(f"The result is written in: {out}")
    return EXIT_OK


@log_in_out("cmd_svg", "commands")
def cmd_svg(args):
    spec = normalize_axes(args.a, args.b)
    layers = tuple(layer.strip() for layer in args.layers.split(',') if layer.strip()) \
        if args.layers else RenderOptions().layers
    opts = RenderOptions(width_px=args.width, height_px=args.height,
                         margin_fraction=args.margin, layers=layers)
    if 'overlay' == args.mode:
        document = render_overlay(spec, opts)
    else:
        document = render_construction(construct(spec), opts)

    out = args.out or Configuration.default_result_path(f"svg_{args.mode}", 'svg')
    write_result(out, document)
    print(f"The result is written in: {out}")
    return EXIT_OK


def _rel(value, expected):
    return abs(value - expected) / expected if expected else abs(value)


def run_checks(spec: EllipseSpec):
    """
    The numerical self-checks of one construction, as (name, passed, worst error) tuples
    """
    a = spec.a
    c = construct(spec)
    path = full_oval(c)
    checks = []

    angle_sum = abs(c.gamma + c.beta + c.delta - math.pi / 2)
    checks.append(('angle sum', angle_sum <= 1e-10, angle_sum))

    # each distance against the radius it should equal, r is b^2/a and R is a^2/b
    tangency = max(_rel(dist(c.e, c.k), c.d_ek), _rel(dist(c.g, c.k), c.d_gk),
                   _rel(dist(c.j_ek, c.e), c.r), _rel(dist(c.j_ek, c.k), c.p),
                   _rel(dist(c.j_gk, c.k), c.p), _rel(dist(c.j_gk, c.g), c.R))
    collinear = 0.0 if c.degenerate else \
        max(collinearity(c.e, c.k, c.j_ek), collinearity(c.g, c.k, c.j_gk))
    checks.append(('tangency', tangency <= 1e-9 and collinear <= 1e-10, max(tangency, collinear)))

    gamma, beta, delta, _ = angles_geometric(c)
    oracle = max(abs(gamma - c.gamma), abs(beta - c.beta), abs(delta - c.delta))
    checks.append(('oracle equivalence', oracle <= 1e-10, oracle))

    perimeter = oval_perimeter(spec)
    homogeneity = abs(oval_perimeter(spec.scaled(10.0)) - 10.0 * perimeter) / (10.0 * perimeter)
    checks.append(('homogeneity', homogeneity <= 1e-12, homogeneity))

    circle = abs(oval_perimeter(EllipseSpec(a, a)) - 2 * math.pi * a) / (2 * math.pi * a)
    checks.append(('circle reduction', circle <= 1e-12, circle))

    closure = max(path.gaps())
    sweep_error = abs(path.total_sweep - 2 * math.pi)
    checks.append(('path closure', closure <= 1e-9 * a and sweep_error <= 1e-10,
                   max(closure / a, sweep_error)))
    return checks


@log_in_out("cmd_check", "commands")
def cmd_check(args):
    # no auto-swap: the check validates exactly what it is given
    spec = EllipseSpec(args.a, args.b)
    checks = run_checks(spec)
    passed = all(ok for _, ok, _ in checks)

    if OutputFormat.JSON == _output_format(args, (OutputFormat.TEXT, OutputFormat.JSON)):
        _print_json({'a': spec.a, 'b': spec.b, 'passed': passed,
                     'checks': [{'name': name, 'passed': ok, 'error': error}
                                for name, ok, error in checks]})
    else:
        for name, ok, error in checks:
            status = _paint('PASS', bcolors.OKGREEN) if ok else _paint('FAIL', bcolors.FAIL)
            print(f"{status} {name} (error {sig(error, 3)})")
        failures = [name for name, ok, _ in checks if not ok]
        if failures:
            print(f"failed: {', '.join(failures)}")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


@log_in_out("cmd_bounds", "commands")
def cmd_bounds(args):
    proofs = prove_sine_bounds()
    passed = all(proof.proven for proof in proofs)
    if OutputFormat.JSON == _output_format(args, (OutputFormat.TEXT, OutputFormat.JSON)):
        _print_json({'passed': passed, 'proofs': [proof.as_dict() for proof in proofs]})
    else:
        for proof in proofs:
            status = _paint('PROVEN', bcolors.OKGREEN) if proof.proven else _paint('UNPROVEN', bcolors.FAIL)
            print(f"{status} {proof.name}: {proof.claim} for all a >= b > 0")
    return EXIT_OK if passed else EXIT_CHECK_FAILED
