# This file sweeps the relative error of the oval perimeter over a grid of semi-axes
import csv
import functools
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from logging import getLogger
from typing import List, Tuple

from octoval.configuration import Configuration
from octoval.core.oval import EllipseSpec
from octoval.exceptions import GridTooLarge, InvalidRange
from octoval.reference.ellipse import compare

logging = getLogger(__name__)

MAX_GRID_POINTS = 1_000_000
CSV_HEADER = ['a', 'b', 'rel_err_percent']
# absorbs the rounding of (hi - lo) / step when the interval is a multiple of step
GRID_EPSILON = 1e-9


@dataclass(frozen=True)
class SweepGrid:
    """
    The per-cell relative errors, row-major with a outer, only cells with b <= a

    Properties:
        a_range, b_range: the closed intervals swept
        step: the grid step shared by both axes
        cells: (a, b, rel_err) tuples, rel_err is a fraction
    """
    a_range: Tuple[float, float]
    b_range: Tuple[float, float]
    step: float
    cells: List[Tuple[float, float, float]]

    @property
    def max_err(self):
        if not self.cells:
            return 0.0
        return max(cell[2] for cell in self.cells)

    @property
    def argmax_cell(self):
        if not self.cells:
            return None
        # the first maximum in row-major order
        a, b, _ = max(self.cells, key=lambda cell: cell[2])
        return (a, b)

    def to_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for a, b, rel_err in self.cells:
            writer.writerow([repr(a), repr(b), repr(rel_err * 100)])
        return buffer.getvalue()

    def as_dict(self):
        return {
            'a_range': list(self.a_range),
            'b_range': list(self.b_range),
            'step': self.step,
            'unit': 'fraction',
            'cells': [{'a': a, 'b': b, 'rel_err': rel_err} for a, b, rel_err in self.cells],
            'max_err': self.max_err,
            'argmax_cell': list(self.argmax_cell) if self.argmax_cell else None,
        }

    @staticmethod
    def from_dict(data):
        if data.get('unit', 'fraction') != 'fraction':
            raise InvalidRange(f"sweep errors must be fractions, got unit {data['unit']!r}")
        return SweepGrid(
            a_range=tuple(data['a_range']),
            b_range=tuple(data['b_range']),
            step=data['step'],
            cells=[(cell['a'], cell['b'], cell['rel_err']) for cell in data['cells']])


def _check_range(name, interval):
    try:
        lo, hi = (float(v) for v in interval)
    except (TypeError, ValueError):
        raise InvalidRange(f"{name} must be a pair of numbers, got {interval!r}")
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidRange(f"{name} must be finite, got [{lo}, {hi}]")
    if lo <= 0:
        raise InvalidRange(f"{name} must lie in (0, inf), got lower bound {lo}")
    if hi < lo:
        raise InvalidRange(f"{name} must satisfy lo <= hi, got [{lo}, {hi}]")
    return lo, hi


def _count(lo, hi, step):
    return math.floor((hi - lo) / step + GRID_EPSILON) + 1


def grid_points(lo, hi, step):
    """
    lo + i * step for i = 0..n, the last point is snapped to hi if it falls within rounding of it
    """
    points = [lo + i * step for i in range(_count(lo, hi, step))]
    if abs(points[-1] - hi) <= GRID_EPSILON * step:
        points[-1] = hi
    return points


def _cell_error(cell, tol):
    a, b = cell
    return compare(EllipseSpec(a, b), tol).rel_err_oval


def sweep(a_range, b_range, step=None, workers=None, tol=None) -> SweepGrid:
    step = Configuration.get_step() if step is None else step
    workers = Configuration.get_workers() if workers is None else workers
    tol = Configuration.get_tolerance() if tol is None else tol

    a_lo, a_hi = _check_range('a range', a_range)
    b_lo, b_hi = _check_range('b range', b_range)
    if not (isinstance(step, (int, float)) and math.isfinite(step) and step > 0):
        raise InvalidRange(f"step must be a positive number, got {step!r}")

    points = _count(a_lo, a_hi, step) * _count(b_lo, b_hi, step)
    if points > MAX_GRID_POINTS:
        raise GridTooLarge(points, MAX_GRID_POINTS)

    pairs = [(a, b)
             for a in grid_points(a_lo, a_hi, step)
             for b in grid_points(b_lo, b_hi, step)
             if b <= a]
    logging.info(f"Sweep {len(pairs)} cells out of {points} grid points, {workers} worker(s)")

    evaluate = functools.partial(_cell_error, tol=tol)
    if workers > 1 and len(pairs) > 1:
        # map keeps the input order, so the grid is the same as the sequential one
        with ProcessPoolExecutor(max_workers=workers) as pool:
            errors = list(pool.map(evaluate, pairs, chunksize=max(1, len(pairs) // (4 * workers))))
    else:
        errors = [evaluate(pair) for pair in pairs]

    return SweepGrid(
        a_range=(a_lo, a_hi),
        b_range=(b_lo, b_hi),
        step=step,
        cells=[(a, b, err) for (a, b), err in zip(pairs, errors)])
