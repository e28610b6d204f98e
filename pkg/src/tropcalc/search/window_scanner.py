import math
import random
from fractions import Fraction
from typing import Callable, Generator, Iterable, Optional

from ..core import PLFunction
from ..models import TropScalar


class WindowScanner:
    """
    Walks a window of a PLFunction.

    Fixed steps are merged with every breakpoint candidate, so a scan
    never skips a slope change, and point checks can be restricted to the
    candidates where a piecewise-linear function can change behaviour.
    """

    def __init__(self, f: PLFunction) -> None:
        """
        Initialize the scanner with a function.

        Args:
            f: The function to scan.
        """
        self._f = f

    def sample_points(
        self, lo: Fraction, hi: Fraction, step: Optional[Fraction] = None
    ) -> Generator[Fraction, None, None]:
        """
        Yield lo, lo + step, ... up to hi merged with the breakpoints, increasing.

        Args:
            lo: Left end of the window.
            hi: Right end of the window.
            step: Sampling step; None yields breakpoints and endpoints only.
        """
        if hi < lo:
            raise ValueError(f"Window must satisfy lo <= hi, got [{lo}, {hi}]")
        if step is not None and step <= 0:
            raise ValueError(f"Step must be positive, got {step}")
        points = set(self._f.breakpoints(lo, hi))
        points.update((lo, hi))
        if step is not None:
            count = math.floor((hi - lo) / step)
            points.update(lo + k * step for k in range(count + 1))
        yield from sorted(points)

    def scan(
        self, lo: Fraction, hi: Fraction, step: Optional[Fraction] = None
    ) -> Generator[tuple[Fraction, TropScalar], None, None]:
        """Yield (x, f(x)) at every sample point of the window."""
        for x in self.sample_points(lo, hi, step):
            yield x, self._f.evaluate(x)

    def random_points(
        self, lo: Fraction, hi: Fraction, count: int, seed: int
    ) -> list[Fraction]:
        """Seeded non-lattice rationals in the window."""
        rng = random.Random(seed)
        points = []
        for _ in range(count):
            q = rng.randint(3, 7)
            p = rng.randint(math.ceil(lo * q), math.floor(hi * q))
            points.append(Fraction(p, q))
        return points

    def first_violation(
        self,
        lo: Fraction,
        hi: Fraction,
        holds: Callable[[Fraction, TropScalar], bool],
        extra_points: Iterable[Fraction] = (),
    ) -> Optional[tuple[Fraction, TropScalar]]:
        """
        Return the first (x, f(x)) where holds fails, or None.

        Breakpoints and endpoints are checked in increasing order, then the
        extra points in the order given.
        """
        for x in list(self.sample_points(lo, hi)) + list(extra_points):
            value = self._f.evaluate(x)
            if not holds(x, value):
                return x, value
        return None
