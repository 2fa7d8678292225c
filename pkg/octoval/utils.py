# This file gives some practical functions that will be adopted by other files

import functools
import logging
import math
import sys
from os import makedirs, path

LOG_FORMAT = '%(asctime)s | %(levelname)s | %(message)s'


def init_logging(verbose_flag, stream=None):
    """
    Config the root logger according to the -v flag.
    Records go to stderr, stdout is reserved for the command output
    """
    if 'debug' == verbose_flag:
        level = logging.DEBUG
    elif 'info' == verbose_flag:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(format=LOG_FORMAT, level=level,
                        stream=stream if stream is not None else sys.stderr,
                        force=True)


def log_in_out(func_name, directory):
    """
    A decorator to log before entering and after exiting a command
    """
    def decorator(f):
        @functools.wraps(f)
        def wrapper(*args, **kw):
            logging.info(f"Call: {func_name} ({directory})")
            ret = f(*args, **kw)
            logging.info(f"Return: {func_name} ({directory})")
            return ret
        return wrapper
    return decorator


def sig(value, digits=6):
    """
    Format a number with the given significant digits, like 541.523 or 1.85e-06.
    Python format specs ignore the locale, so the decimal point is always '.'
    """
    if value == 0:
        return "0"
    return f"{value:.{digits}g}"


def fmt_point(point, digits=6):
    return f"({sig(point[0], digits)}, {sig(point[1], digits)})"


def rad_deg(angle, digits=6):
    """
    Angles are radians everywhere, degrees only appear on display
    """
    return f"{sig(angle, digits)} rad ({sig(math.degrees(angle), digits)} deg)"


def write_result(file_name, content):
    """
    Write the text content into file_name, the parent folder is created if needed.
    OSError is left to the caller, which maps it to the I/O exit code
    """
    parent = path.dirname(file_name)
    if parent:
        makedirs(parent, exist_ok=True)
    with open(file_name, 'w', encoding='utf-8', newline='') as fp:
        fp.write(content)
    logging.info(f"The result is written in: {file_name}")
