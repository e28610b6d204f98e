from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction


class EventKind(IntEnum):
    """Classification of a slope jump."""

    ROOT = 1
    POLE = -1

    @property
    def display_name(self) -> str:
        return self.name.lower()

    @classmethod
    def from_jump(cls, omega: Fraction) -> "EventKind":
        """
        Classify a nonzero slope jump.

        Raises:
            ValueError: If omega is zero.
        """
        if omega == 0:
            raise ValueError("A zero slope jump is not an event")
        return cls.ROOT if omega > 0 else cls.POLE


@dataclass(frozen=True)
class BreakpointEvent:
    """
    A root or pole of a piecewise-linear function.

    Attributes:
        location: Position x0 of the breakpoint.
        omega: Right slope minus left slope at x0 (never zero).
    """

    location: Fraction
    omega: Fraction

    @property
    def kind(self) -> EventKind:
        return EventKind.from_jump(self.omega)

    @property
    def multiplicity(self) -> Fraction:
        return abs(self.omega)

    @property
    def is_root(self) -> bool:
        return self.omega > 0

    @property
    def is_pole(self) -> bool:
        return self.omega < 0
