"""Roots and linearity of alpha f(x) + f(x+c)."""

import logging
from fractions import Fraction
from typing import Optional

from ..config import Config
from ..core import PLFunction, otimes, power, shift
from ..models import LinearityVerdict, RootCensus

logger = logging.getLogger(__name__)

LINEAR_F = "hypothesis violated (linear f)"
ALPHA_NOT_POSITIVE = "alpha not positive"
NOT_ENTIRE = "f not entire on the window"


def hayman_product(
    f: PLFunction,
    alpha: Fraction | int,
    c: Fraction | int,
    window: Optional[tuple[Fraction, Fraction]] = None,
) -> PLFunction:
    """
    G(x) = alpha f(x) + f(x + c), the tropical f^alpha (x) f(x+c).

    For alpha > 0 and f entire on the window, G is entire there as well; a
    pole found in that situation is logged as a warning.
    """
    alpha, c = Fraction(alpha), Fraction(c)
    product = otimes(power(f, alpha), shift(f, c))
    lo, hi = window if window is not None else Config.get_grid_window()
    if alpha > 0 and f.is_entire_on(lo - abs(c), hi + abs(c)) and not product.is_entire_on(lo, hi):
        logger.warning("alpha f(x) + f(x+%s) has a pole on [%s, %s] although f is entire", c, lo, hi)
    return product


def hayman_census(
    f: PLFunction,
    alpha: Fraction | int,
    c: Fraction | int,
    window: Optional[tuple[Fraction, Fraction]] = None,
) -> RootCensus:
    """Roots of alpha f(x) + f(x+c) in the closed window."""
    alpha, c = Fraction(alpha), Fraction(c)
    lo, hi = window if window is not None else Config.get_grid_window()
    product = hayman_product(f, alpha, c, (lo, hi))
    roots = tuple(event for event in product.events_in(lo, hi, closed=True) if event.is_root)
    flags = []
    if not f.events_in(lo, hi, closed=True):
        flags.append(LINEAR_F)
    if alpha <= 0:
        flags.append(ALPHA_NOT_POSITIVE)
    if not f.is_entire_on(lo, hi):
        flags.append(NOT_ENTIRE)
    logger.debug("census of %s roots on [%s, %s]", len(roots), lo, hi)
    return RootCensus((lo, hi), roots, tuple(flags))


def hayman_linearity_check(
    f: PLFunction,
    alpha: Fraction | int,
    c: Fraction | int,
    window: Optional[tuple[Fraction, Fraction]] = None,
) -> LinearityVerdict:
    """
    Test whether alpha f(x) + f(x+c) is a line ax + b on the window.

    The line is fitted through the endpoints and verified at the midpoint
    and at every breakpoint candidate.
    """
    alpha, c = Fraction(alpha), Fraction(c)
    lo, hi = window if window is not None else Config.get_grid_window()
    product = hayman_product(f, alpha, c, (lo, hi))
    y_lo, y_hi = product(lo), product(hi)
    if y_lo.is_bottom or y_hi.is_bottom:
        witness = lo if y_lo.is_bottom else hi
        return LinearityVerdict(False, Fraction(0), Fraction(0), witness)
    slope = (y_hi.value - y_lo.value) / (hi - lo)
    intercept = y_lo.value - slope * lo
    for x in [(lo + hi) / 2] + product.breakpoints(lo, hi):
        value = product(x)
        if value.is_bottom or value.value != slope * x + intercept:
            return LinearityVerdict(False, slope, intercept, x)
    return LinearityVerdict(True, slope, intercept)
