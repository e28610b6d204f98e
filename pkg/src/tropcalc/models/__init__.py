from .scalar import TropScalar
from .events import EventKind, BreakpointEvent
from .status import FamilyStatus, BruckAlternative
from .results import (
    NevanlinnaReport,
    RootCensus,
    FermatVerdict,
    LinearityVerdict,
    BruckReport,
)

__all__ = [
    "TropScalar",
    "EventKind",
    "BreakpointEvent",
    "FamilyStatus",
    "BruckAlternative",
    "NevanlinnaReport",
    "RootCensus",
    "FermatVerdict",
    "LinearityVerdict",
    "BruckReport",
]
