# This file defines our own exceptions and the exit codes of launcher.py
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_IO_ERROR = 3


class OvalError(Exception):
    """
    The base of all exceptions raised by octoval
    """
    pass


class InvalidAxes(OvalError, ValueError):
    """
    used in `core/oval.py`
    indicating the semi-axes violate a >= b > 0 or are not finite
    """
    pass


class DegenerateGeometry(OvalError):
    """
    used in `core/geometry.py` and `core/oval.py`
    indicating a circle intersection or an arcsine argument failed numerically,
    which is not expected for valid semi-axes
    """
    pass


class NonConvergence(OvalError):
    """
    used in `reference/ellipse.py`
    indicating the AGM iteration hits its cap before reaching the tolerance
    """

    def __init__(self, iterations, residual):
        self.iterations = iterations
        self.residual = residual

    def __str__(self):
        return f"AGM did not converge after {self.iterations} iterations (residual {self.residual!r})"


class InvalidRange(OvalError, ValueError):
    """
    used in `analysis/` and `reference/ellipse.py`
    indicating an interval, step, tolerance or sample count out of its domain
    """
    pass


class GridTooLarge(OvalError):
    """
    used in `analysis/sweep.py`
    indicating the requested sweep has more cells than the allowed limit
    """

    def __init__(self, cells, limit):
        self.cells = cells
        self.limit = limit

    def __str__(self):
        return f"sweep grid has {self.cells} points, the limit is {self.limit}"


class InvalidOptions(OvalError, ValueError):
    """
    used in `render/svg.py`
    indicating the canvas size, margin or layer names are not supported
    """
    pass
