#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import argparse
import logging
import sys
from datetime import datetime

from octoval.commands import (OutputFormat, cmd_bounds, cmd_check,
                              cmd_params, cmd_perimeter, cmd_svg, cmd_sweep)
from octoval.configuration import Configuration
from octoval.exceptions import (EXIT_CHECK_FAILED, EXIT_INPUT_ERROR,
                                EXIT_IO_ERROR, GridTooLarge, InvalidAxes,
                                InvalidOptions, InvalidRange, OvalError)
from octoval.utils import init_logging


def build_parser():
    parser = argparse.ArgumentParser(
        description='OctOval, the eight-centered oval approximation of an ellipse')
    parser.add_argument(
        '-v', '--verbose', default='warning', const='warning', nargs='?',
        choices=['warning', 'info', 'debug'],
        help='set the logging level')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')

    def add_format(sub, default):
        sub.add_argument(
            '--format', default=default, choices=[f.value for f in OutputFormat],
            help=f'output format (default: {default})')

    def add_axes(sub):
        sub.add_argument('a', type=float, help='semi-major axis')
        sub.add_argument('b', type=float, help='semi-minor axis')

    params = subparsers.add_parser(
        'params', help='centers, radii and central angles of the oval')
    add_axes(params)
    add_format(params, 'text')
    params.set_defaults(func=cmd_params)

    perimeter = subparsers.add_parser(
        'perimeter', help='oval, elliptic and Kepler perimeters with relative errors')
    add_axes(perimeter)
    add_format(perimeter, 'text')
    perimeter.add_argument(
        '--samples', type=int, default=None,
        help=f'polar angles of the radial deviation (default: {Configuration.get_samples()})')
    perimeter.set_defaults(func=cmd_perimeter)

    sweep = subparsers.add_parser(
        'sweep', help='relative perimeter error over a grid of semi-axes with b <= a')
    sweep.add_argument('a_min', type=float)
    sweep.add_argument('a_max', type=float)
    sweep.add_argument('b_min', type=float)
    sweep.add_argument('b_max', type=float)
    sweep.add_argument('step_pos', type=float, nargs='?', default=None, metavar='step',
                       help='grid step, same as --step')
    sweep.add_argument(
        '--step', type=float, default=None,
        help=f'grid step (default: {Configuration.get_step()})')
    sweep.add_argument(
        '--workers', type=int, default=None,
        help='processes evaluating the grid, the result does not depend on it (default: 1)')
    sweep.add_argument('-o', '--out', type=str, help='output file')
    add_format(sweep, 'csv')
    sweep.set_defaults(func=cmd_sweep)

    svg = subparsers.add_parser('svg', help='draw the construction or the overlay as SVG')
    add_axes(svg)
    svg.add_argument(
        '--mode', default='construction', choices=['construction', 'overlay'],
        help='what to draw (default: construction)')
    svg.add_argument('--width', type=int, default=800, help='canvas width in px')
    svg.add_argument('--height', type=int, default=600, help='canvas height in px')
    svg.add_argument('--margin', type=float, default=0.08,
                     help='margin as a fraction of the canvas, in [0, 0.4]')
    svg.add_argument('--layers', type=str, default=None,
                     help='comma-separated layers to draw (default: all)')
    svg.add_argument('-o', '--out', type=str, help='output file')
    svg.set_defaults(func=cmd_svg)

    check = subparsers.add_parser(
        'check', help='run the numerical self-checks, exit 1 if any fails')
    add_axes(check)
    add_format(check, 'text')
    check.set_defaults(func=cmd_check)

    bounds = subparsers.add_parser(
        'bounds', help='prove the bounds of the central-angle sines with the SMT solver')
    add_format(bounds, 'text')
    bounds.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    Configuration.set_verbose_flag(args.verbose)
    init_logging(args.verbose)
    if not Configuration.get_start_time():
        Configuration.set_start_time(datetime.now().strftime("%Y-%m-%d_%H-%M-%S_%f"))

    if not args.command:
        parser.print_help()
        return EXIT_INPUT_ERROR

    job_start_time = datetime.now()
    logging.info(f"Start to run {args.command}: {job_start_time}")
    try:
        return args.func(args)
    except (InvalidAxes, InvalidRange, GridTooLarge, InvalidOptions) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        print(f"error: cannot write the result: {e}", file=sys.stderr)
        return EXIT_IO_ERROR
    except OvalError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    finally:
        logging.info(f"Time elapsed: {datetime.now() - job_start_time}")


if __name__ == '__main__':
    sys.exit(main())
