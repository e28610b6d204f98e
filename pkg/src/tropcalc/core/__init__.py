from .base import PLFunction
from .nodes import Const, Linear, FinitePL, Max, Sum, Difference, Scale, Shift, Stretch
from .algebra import (
    const,
    bottom,
    linear,
    finite_pl,
    tropical_polynomial,
    evaluate,
    oplus,
    otimes,
    oslash,
    power,
    shift,
    stretch,
    omega_jump,
    events_in,
    is_entire_on,
)

__all__ = [
    "PLFunction",
    "Const",
    "Linear",
    "FinitePL",
    "Max",
    "Sum",
    "Difference",
    "Scale",
    "Shift",
    "Stretch",
    "const",
    "bottom",
    "linear",
    "finite_pl",
    "tropical_polynomial",
    "evaluate",
    "oplus",
    "otimes",
    "oslash",
    "power",
    "shift",
    "stretch",
    "omega_jump",
    "events_in",
    "is_entire_on",
]
