from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .events import BreakpointEvent
from .scalar import TropScalar
from .status import BruckAlternative

Window = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class NevanlinnaReport:
    """
    Sampled value-distribution functionals and fitted growth exponents.

    Attributes:
        radii: Radii at which m, N and T were computed (increasing).
        m_values: Proximity function per radius, exact.
        n_values: Counting function per radius, exact.
        t_values: Characteristic per radius (m + N), exact.
        order_estimate: Least-squares slope of log T against log r.
        hyper_order_estimate: Same with log log T, or None when not meaningful.
        fit_window: (r_min, r_max) of the radii used for the fit.
        flags: Conventions that were applied (e.g. "bounded characteristic").
    """

    radii: tuple[Fraction, ...]
    m_values: tuple[Fraction, ...]
    n_values: tuple[Fraction, ...]
    t_values: tuple[Fraction, ...]
    order_estimate: float
    hyper_order_estimate: Optional[float]
    fit_window: Window
    flags: tuple[str, ...] = ()
    estimator: str = "least-squares proxy on the upper half of the radius grid"


@dataclass(frozen=True)
class RootCensus:
    """
    Roots of a function inside a closed window.

    Attributes:
        window: The (lo, hi) window scanned, endpoints included.
        roots: Root events sorted by location.
        flags: Hypothesis notes attached by the caller.
    """

    window: Window
    roots: tuple[BreakpointEvent, ...]
    flags: tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return len(self.roots)

    @property
    def total_multiplicity(self) -> Fraction:
        return sum((event.multiplicity for event in self.roots), Fraction(0))


@dataclass(frozen=True)
class FermatVerdict:
    """
    Outcome of checking a max-combination against the constant 1.

    Attributes:
        holds: True if the identity held at every checked point.
        window: Final window checked (after any doubling).
        witness: First point where the identity fails, if any.
        value: Value of the combination at the witness.
        hypotheses_hold: Whether all exponents are positive and all inputs entire.
    """

    holds: bool
    window: Window
    witness: Optional[Fraction] = None
    value: Optional[TropScalar] = None
    hypotheses_hold: bool = False


@dataclass(frozen=True)
class LinearityVerdict:
    """
    Outcome of testing a function for global linearity on a window.

    Attributes:
        is_linear: True if the function equals slope*x + intercept on the window.
        slope: Fitted slope.
        intercept: Fitted intercept.
        witness: First point contradicting linearity, if any.
    """

    is_linear: bool
    slope: Fraction
    intercept: Fraction
    witness: Optional[Fraction] = None


@dataclass(frozen=True)
class BruckReport:
    """
    Result of the Brück-type check max(f(x+1), a) = max(f(x), a) + Ax + B.

    Attributes:
        alternative: Tail classification.
        a_coeff: Recovered A.
        b_coeff: Recovered B.
        periodic_residue_verified: f - A*Psi - (B-A)x is 1-periodic on the active tails.
        shared_root_check: Both clipped functions have the same events on the window.
        tails: The tails used for classification and the residue check.
        level: The clipping level a.
        mismatch: First event present in only one of the clipped functions.
        linear_difference: The difference g(x) was verified linear on the window.
    """

    alternative: BruckAlternative
    a_coeff: Fraction
    b_coeff: Fraction
    periodic_residue_verified: bool
    shared_root_check: bool
    tails: tuple[Window, ...]
    level: Fraction
    mismatch: Optional[BreakpointEvent] = None
    linear_difference: bool = True
    flags: tuple[str, ...] = field(default_factory=tuple)
