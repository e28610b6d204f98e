"""Proximity, counting and characteristic functions, and growth-order fits."""

import logging
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..config import Config
from ..core import PLFunction
from ..models import BreakpointEvent, NevanlinnaReport

logger = logging.getLogger(__name__)

BOUNDED = "bounded characteristic"
HYPER_NOT_MEANINGFUL = "hyper-order not meaningful (T <= 1 on the fit window)"


def _positive_part(f: PLFunction, x: Fraction) -> Fraction:
    value = f(x)
    if value.is_bottom:
        return Fraction(0)
    return max(value.value, Fraction(0))


def _check_radius(r: Fraction) -> Fraction:
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"Radius must be positive, got {r}")
    return r


def proximity(f: PLFunction, r: Fraction | int) -> Fraction:
    """m(r, f) = (f+(r) + f+(-r)) / 2."""
    r = _check_radius(r)
    return (_positive_part(f, r) + _positive_part(f, -r)) / 2


def _poles(f: PLFunction, r: Fraction) -> list[BreakpointEvent]:
    return [event for event in f.events_in(-r, r) if event.is_pole]


def _counting_from(poles: Sequence[BreakpointEvent], r: Fraction) -> Fraction:
    total = sum(
        (p.multiplicity * (r - abs(p.location)) for p in poles if abs(p.location) < r),
        Fraction(0),
    )
    return total / 2


def counting(f: PLFunction, r: Fraction | int) -> Fraction:
    """N(r, f): half the multiplicity-weighted ramps r - |b| over poles b in (-r, r)."""
    r = _check_radius(r)
    return _counting_from(_poles(f, r), r)


def characteristic(f: PLFunction, r: Fraction | int) -> Fraction:
    """T(r, f) = m(r, f) + N(r, f)."""
    return proximity(f, r) + counting(f, r)


def _log(q: Fraction) -> float:
    # big rationals overflow float(), their integer parts do not
    return math.log(q.numerator) - math.log(q.denominator)


def _slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    return float(np.polyfit(np.asarray(xs), np.asarray(ys), 1)[0])


def nevanlinna_report(f: PLFunction, radii: Sequence[Fraction] | None = None) -> NevanlinnaReport:
    """
    Sample m, N, T on a radius grid and fit order and hyper-order.

    The fit uses the upper half of the grid. T is exact; only the logarithms
    and the regression are floating point.

    Raises:
        ValueError: If the radii are not increasing or fewer than 8.
    """
    radii = [Fraction(r) for r in (radii if radii is not None else Config.get_radii())]
    if len(radii) < 8:
        raise ValueError(f"Need at least 8 radii, got {len(radii)}")
    if any(r0 >= r1 for r0, r1 in zip(radii, radii[1:])) or radii[0] <= 0:
        raise ValueError("Radii must be positive and strictly increasing")

    poles = _poles(f, radii[-1])
    m_values = [proximity(f, r) for r in radii]
    n_values = [_counting_from(poles, r) for r in radii]
    t_values = [m + n for m, n in zip(m_values, n_values)]

    fit_radii = radii[len(radii) // 2:]
    fit_t = t_values[len(radii) // 2:]
    log_r = [_log(r) for r in fit_radii]
    flags = []

    if any(t == 0 for t in fit_t) or len(set(fit_t)) == 1:
        order = 0.0
        flags.append(BOUNDED)
    else:
        order = _slope(log_r, [_log(t) for t in fit_t])

    if all(t > 1 for t in fit_t):
        hyper = _slope(log_r, [math.log(_log(t)) for t in fit_t])
    else:
        hyper = None
        flags.append(HYPER_NOT_MEANINGFUL)

    logger.debug("order fit over r in [%s, %s]: order=%s hyper=%s", fit_radii[0], fit_radii[-1], order, hyper)
    return NevanlinnaReport(
        radii=tuple(radii),
        m_values=tuple(m_values),
        n_values=tuple(n_values),
        t_values=tuple(t_values),
        order_estimate=order,
        hyper_order_estimate=hyper,
        fit_window=(fit_radii[0], fit_radii[-1]),
        flags=tuple(flags),
    )


def order_estimate(
    f: PLFunction, radii: Sequence[Fraction] | None = None
) -> tuple[float, float | None]:
    """Return (order, hyper-order) estimates; hyper-order is None when not meaningful."""
    report = nevanlinna_report(f, radii)
    return report.order_estimate, report.hyper_order_estimate
