from abc import ABC, abstractmethod
from fractions import Fraction

from ..errors import TropDomainError
from ..models import BreakpointEvent, TropScalar


class PLFunction(ABC):
    """
    Abstract base class for continuous piecewise-linear functions of one
    rational variable, valued in the max-plus semiring.

    Subclasses provide exact evaluation and a breakpoint enumeration on
    bounded windows. Slopes, slope jumps and events are derived here from
    those two primitives, so every node only has to know its own values and
    where it may bend.
    """

    @abstractmethod
    def evaluate(self, x: Fraction) -> TropScalar:
        """
        Evaluate the function exactly.

        Args:
            x: A rational point.

        Returns:
            The value at x, Bottom for the constant -inf function.
        """
        pass

    @abstractmethod
    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        """
        Enumerate breakpoint candidates inside [lo, hi].

        Args:
            lo: Left end of the window.
            hi: Right end of the window.

        Returns:
            Sorted, duplicate-free list containing every point of [lo, hi]
            where the slope may change. Extra candidates are allowed; the
            function must be linear between consecutive candidates.
        """
        pass

    @property
    def is_bottom(self) -> bool:
        """True if the function is identically -inf."""
        return False

    def __call__(self, x: Fraction | int | str) -> TropScalar:
        return self.evaluate(Fraction(x))

    def value(self, x: Fraction | int | str) -> Fraction:
        """
        Return the rational value at x.

        Raises:
            TropDomainError: If the function is Bottom at x.
        """
        result = self.evaluate(Fraction(x))
        if result.is_bottom:
            raise TropDomainError(f"function is -inf at x={x}; no rational value")
        return result.value

    def slopes(self, x: Fraction | int | str) -> tuple[Fraction, Fraction]:
        """Return the exact (left, right) one-sided slopes at x."""
        x = Fraction(x)
        if self.is_bottom:
            return Fraction(0), Fraction(0)
        points = self._partition(x - 1, x + 1, extra=(x,))
        index = points.index(x)
        values = [self.value(points[i]) for i in (index - 1, index, index + 1)]
        left = (values[1] - values[0]) / (points[index] - points[index - 1])
        right = (values[2] - values[1]) / (points[index + 1] - points[index])
        return left, right

    def omega_jump(self, x: Fraction | int | str) -> Fraction:
        """Right slope minus left slope at x."""
        left, right = self.slopes(x)
        return right - left

    def events_in(
        self, lo: Fraction | int, hi: Fraction | int, closed: bool = False
    ) -> list[BreakpointEvent]:
        """
        List roots and poles inside the window, sorted by location.

        Args:
            lo: Left end of the window.
            hi: Right end of the window.
            closed: Include events located exactly at lo or hi.

        Returns:
            Events with nonzero slope jump.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        if lo >= hi:
            raise ValueError(f"Window must satisfy lo < hi, got [{lo}, {hi}]")
        if self.is_bottom:
            return []

        points = self._partition(lo - 1, hi + 1)
        values = [self.value(p) for p in points]
        slopes = [
            (values[i + 1] - values[i]) / (points[i + 1] - points[i])
            for i in range(len(points) - 1)
        ]

        events = []
        for i in range(1, len(points) - 1):
            location = points[i]
            inside = lo <= location <= hi if closed else lo < location < hi
            if not inside:
                continue
            omega = slopes[i] - slopes[i - 1]
            if omega != 0:
                events.append(BreakpointEvent(location, omega))
        return events

    def is_entire_on(self, lo: Fraction | int, hi: Fraction | int) -> bool:
        """True iff there is no pole inside (lo, hi)."""
        return not any(event.is_pole for event in self.events_in(lo, hi))

    def _partition(
        self, lo: Fraction, hi: Fraction, extra: tuple[Fraction, ...] = ()
    ) -> list[Fraction]:
        """Candidates in [lo, hi] together with both endpoints and any extra points."""
        points = set(self.breakpoints(lo, hi))
        points.update((lo, hi))
        points.update(extra)
        return sorted(points)
