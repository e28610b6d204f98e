import logging
from fractions import Fraction
from typing import Optional

from ..config import Config
from ..core import PLFunction

logger = logging.getLogger(__name__)

GROWTH_STREAK = 4


def looks_transcendental(
    f: PLFunction,
    window: Optional[tuple[Fraction, Fraction]] = None,
    cap: Optional[int] = None,
) -> bool:
    """
    Heuristic: a tropical polynomial has finitely many events.

    The window is doubled until the event count repeats (polynomial), or
    until it has grown at four consecutive doublings or the cap is reached
    (transcendental).
    """
    lo, hi = window if window is not None else Config.get_grid_window()
    cap = Config.get_doubling_cap() if cap is None else cap
    previous = len(f.events_in(lo, hi, closed=True))
    streak = 0
    for _ in range(cap):
        lo, hi = 2 * lo, 2 * hi
        count = len(f.events_in(lo, hi, closed=True))
        logger.debug("%d events on [%s, %s]", count, lo, hi)
        if count == previous:
            return False
        streak += 1
        if streak >= GROWTH_STREAK:
            return True
        previous = count
    return True
