"""Checker for tropical Fermat-type sums of powers equal to the constant 1."""

import logging
from fractions import Fraction
from typing import Optional, Sequence

from ..config import Config
from ..core import PLFunction, oplus, power
from ..models import FermatVerdict, TropScalar
from ..search import WindowScanner

logger = logging.getLogger(__name__)

RANDOM_POINTS = 16
TARGET = TropScalar(Fraction(1))


def fermat_combination(fs: Sequence[PLFunction], alphas: Sequence[Fraction]) -> PLFunction:
    """max_j alpha_j f_j(x)."""
    if not fs:
        raise ValueError("fermat_sum_check needs at least one function")
    if len(fs) != len(alphas):
        raise ValueError(f"got {len(fs)} functions but {len(alphas)} exponents")
    return oplus(*(power(f, alpha) for f, alpha in zip(fs, alphas)))


def fermat_sum_check(
    fs: Sequence[PLFunction],
    alphas: Sequence[Fraction | int],
    window: Optional[tuple[Fraction, Fraction]] = None,
    cap: Optional[int] = None,
    seed: Optional[int] = None,
) -> FermatVerdict:
    """
    Look for a point where max_j alpha_j f_j(x) differs from 1.

    Breakpoints, endpoints and seeded random points of the window are
    checked. While the identity holds and every exponent is positive with
    every input entire, the window is doubled up to cap times; non-constant
    entire inputs always fail somewhere.

    Raises:
        ValueError: If fs is empty or the lengths differ.
    """
    alphas = [Fraction(a) for a in alphas]
    combination = fermat_combination(fs, alphas)
    lo, hi = window if window is not None else Config.get_grid_window()
    cap = Config.get_doubling_cap() if cap is None else cap
    seed = Config.get_seed() if seed is None else seed
    scanner = WindowScanner(combination)

    def hypotheses(lo: Fraction, hi: Fraction) -> bool:
        return all(a > 0 for a in alphas) and all(f.is_entire_on(lo, hi) for f in fs)

    doublings = 0
    while True:
        extra = scanner.random_points(lo, hi, RANDOM_POINTS, seed)
        found = scanner.first_violation(lo, hi, lambda _, value: value == TARGET, extra)
        hypotheses_hold = hypotheses(lo, hi)
        if found is not None:
            witness, value = found
            logger.debug("fermat identity fails at %s with value %s", witness, value)
            return FermatVerdict(False, (lo, hi), witness, value, hypotheses_hold)
        if not hypotheses_hold or doublings >= cap:
            return FermatVerdict(True, (lo, hi), hypotheses_hold=hypotheses_hold)
        doublings += 1
        lo, hi = 2 * lo, 2 * hi
        logger.debug("fermat identity holds so far; doubling window to [%s, %s]", lo, hi)
