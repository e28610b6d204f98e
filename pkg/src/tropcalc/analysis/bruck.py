"""
Checker for max(f(x+1), a) = max(f(x), a) + Ax + B.

When both clipped functions share their roots, the difference is linear
and f is, near -inf, near +inf or near both, a periodic function plus
A Psi(x) + (B - A)x. Tails are finite windows here, so every verdict is
about the tails it names.
"""

import logging
from fractions import Fraction
from typing import Optional, Sequence

from ..config import Config
from ..core import PLFunction, const, linear, oplus, oslash, otimes, power, shift
from ..models import BreakpointEvent, BruckAlternative, BruckReport
from ..special import Psi

logger = logging.getLogger(__name__)

Window = tuple[Fraction, Fraction]

NOT_ENTIRE = "f not entire on the window"
NOT_LINEAR = "difference of the clipped functions is not linear"
ROOTS_DIFFER = "shared-root hypothesis fails"


def _first_mismatch(
    left: list[BreakpointEvent], right: list[BreakpointEvent]
) -> Optional[BreakpointEvent]:
    only = set(left).symmetric_difference(right)
    if not only:
        return None
    return min(only, key=lambda event: event.location)


def _above(f: PLFunction, lo: Fraction, hi: Fraction, level: Fraction) -> bool:
    """f > level on [lo, hi]; a PL function takes its minimum at a candidate or an end."""
    points = set(f.breakpoints(lo, hi)) | {lo, hi}
    return all(f.value(x) > level for x in points)


def _vanishes(h: PLFunction, lo: Fraction, hi: Fraction) -> bool:
    points = set(h.breakpoints(lo, hi)) | {lo, hi}
    return all(h.value(x) == 0 for x in points)


def bruck_check(
    f: PLFunction,
    a: Fraction | int,
    tails: Optional[Sequence[Window]] = None,
) -> BruckReport:
    """
    Check the shared-root hypothesis, recover A and B and classify the tails.

    Args:
        f: Function to test, expected entire on the hull of the tails.
        a: Clipping level.
        tails: Left and right tail windows; Config.get_bruck_tails() by default.
    """
    a = Fraction(a)
    tails = tuple((Fraction(t0), Fraction(t1)) for t0, t1 in (tails if tails is not None else Config.get_bruck_tails()))
    if len(tails) != 2:
        raise ValueError(f"bruck_check needs a left and a right tail, got {len(tails)}")
    lo = min(t[0] for t in tails)
    hi = max(t[1] for t in tails)
    flags = []
    if not f.is_entire_on(lo, hi + 1):
        flags.append(NOT_ENTIRE)
        logger.warning("bruck_check on a function with poles in [%s, %s]", lo, hi + 1)

    level = const(a)
    clipped_next = oplus(shift(f, 1), level)
    clipped = oplus(f, level)
    mismatch = _first_mismatch(
        clipped_next.events_in(lo, hi, closed=True), clipped.events_in(lo, hi, closed=True)
    )
    if mismatch is not None:
        flags.append(ROOTS_DIFFER)

    g = oslash(clipped_next, clipped)
    a_coeff = (g.value(hi) - g.value(lo)) / (hi - lo)
    b_coeff = g.value(lo) - a_coeff * lo
    checkpoints = [(lo + hi) / 2] + g.breakpoints(lo, hi)
    linear_difference = all(g.value(x) == a_coeff * x + b_coeff for x in checkpoints)
    if not linear_difference:
        flags.append(NOT_LINEAR)

    active = [_above(f, t0, t1 + 1, a) for t0, t1 in tails]
    if all(active):
        alternative = BruckAlternative.BOTH_TAILS
    elif active[0]:
        alternative = BruckAlternative.NEG_TAIL
    elif active[1]:
        alternative = BruckAlternative.POS_TAIL
    else:
        alternative = BruckAlternative.INCONCLUSIVE

    residue = periodic_residue(f, a_coeff, b_coeff)
    step = oslash(shift(residue, 1), residue)
    checked = [t for t, is_active in zip(tails, active) if is_active]
    periodic = bool(checked) and all(_vanishes(step, t0, t1) for t0, t1 in checked)
    logger.debug("bruck: A=%s B=%s alternative=%s periodic=%s", a_coeff, b_coeff, alternative.display_name, periodic)

    return BruckReport(
        alternative=alternative,
        a_coeff=a_coeff,
        b_coeff=b_coeff,
        periodic_residue_verified=periodic,
        shared_root_check=mismatch is None,
        tails=tails,
        level=a,
        mismatch=mismatch,
        linear_difference=linear_difference,
        flags=tuple(flags),
    )


def periodic_residue(f: PLFunction, a_coeff: Fraction, b_coeff: Fraction) -> PLFunction:
    """f - A Psi - (B - A)x."""
    return oslash(f, otimes(power(Psi(), a_coeff), linear(b_coeff - a_coeff)))
