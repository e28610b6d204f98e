"""Combinator and primitive nodes of the PLFunction expression tree."""

import bisect
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import TropDomainError
from ..models import TropScalar
from .base import PLFunction


def _merge(*lists: list[Fraction]) -> list[Fraction]:
    merged: set[Fraction] = set()
    for points in lists:
        merged.update(points)
    return sorted(merged)


@dataclass(frozen=True)
class Const(PLFunction):
    """The constant function, possibly Bottom."""

    scalar: TropScalar

    def evaluate(self, x: Fraction) -> TropScalar:
        return self.scalar

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        return []

    @property
    def is_bottom(self) -> bool:
        return self.scalar.is_bottom


@dataclass(frozen=True)
class Linear(PLFunction):
    """x -> slope*x + intercept."""

    slope: Fraction
    intercept: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def evaluate(self, x: Fraction) -> TropScalar:
        return TropScalar(self.slope * x + self.intercept)

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        return []


@dataclass(frozen=True)
class FinitePL(PLFunction):
    """
    A function with finitely many breakpoints.

    Attributes:
        points: Strictly increasing (x, value) pairs; consecutive pairs are
            joined by segments.
        left_tail_slope: Slope left of the first point.
        right_tail_slope: Slope right of the last point.
    """

    points: tuple[tuple[Fraction, Fraction], ...]
    left_tail_slope: Fraction = Fraction(0)
    right_tail_slope: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        points = tuple((Fraction(x), Fraction(v)) for x, v in self.points)
        if not points:
            raise TropDomainError("FinitePL needs at least one breakpoint")
        for (x0, _), (x1, _) in zip(points, points[1:]):
            if x1 <= x0:
                raise TropDomainError(
                    f"FinitePL breakpoints must increase strictly, got {x0} then {x1}"
                )
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "left_tail_slope", Fraction(self.left_tail_slope))
        object.__setattr__(self, "right_tail_slope", Fraction(self.right_tail_slope))

    @property
    def _xs(self) -> list[Fraction]:
        return [x for x, _ in self.points]

    def evaluate(self, x: Fraction) -> TropScalar:
        first_x, first_v = self.points[0]
        last_x, last_v = self.points[-1]
        if x <= first_x:
            return TropScalar(first_v + self.left_tail_slope * (x - first_x))
        if x >= last_x:
            return TropScalar(last_v + self.right_tail_slope * (x - last_x))
        i = bisect.bisect_right(self._xs, x)
        (x0, v0), (x1, v1) = self.points[i - 1], self.points[i]
        return TropScalar(v0 + (v1 - v0) * (x - x0) / (x1 - x0))

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        return [x for x in self._xs if lo <= x <= hi]


@dataclass(frozen=True)
class Max(PLFunction):
    """Pointwise maximum (tropical sum) of non-Bottom children."""

    children: tuple[PLFunction, ...]

    def evaluate(self, x: Fraction) -> TropScalar:
        result = TropScalar.BOTTOM
        for child in self.children:
            result = result.oplus(child.evaluate(x))
        return result

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        live = [child for child in self.children if not child.is_bottom]
        base = _merge(*(child.breakpoints(lo, hi) for child in live))
        grid = _merge(base, [lo, hi])
        crossings = []
        for a, b in zip(grid, grid[1:]):
            ends = [(child.value(a), child.value(b)) for child in live]
            for (fa, fb), (ga, gb) in combinations(ends, 2):
                da, db = fa - ga, fb - gb
                if da * db < 0:
                    crossings.append(a + (b - a) * da / (da - db))
        return _merge(base, crossings)

    @property
    def is_bottom(self) -> bool:
        return all(child.is_bottom for child in self.children)


@dataclass(frozen=True)
class Sum(PLFunction):
    """Pointwise sum (tropical product); Bottom if any child is Bottom."""

    children: tuple[PLFunction, ...]

    def evaluate(self, x: Fraction) -> TropScalar:
        result = TropScalar.ONE
        for child in self.children:
            result = result.otimes(child.evaluate(x))
        return result

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        return _merge(*(child.breakpoints(lo, hi) for child in self.children))

    @property
    def is_bottom(self) -> bool:
        return any(child.is_bottom for child in self.children)


@dataclass(frozen=True)
class Difference(PLFunction):
    """Pointwise difference (tropical quotient); undefined where the divisor is Bottom."""

    numerator: PLFunction
    denominator: PLFunction

    def evaluate(self, x: Fraction) -> TropScalar:
        return self.numerator.evaluate(x).oslash(self.denominator.evaluate(x))

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        return _merge(self.numerator.breakpoints(lo, hi), self.denominator.breakpoints(lo, hi))

    @property
    def is_bottom(self) -> bool:
        return self.numerator.is_bottom and not self.denominator.is_bottom


@dataclass(frozen=True)
class Scale(PLFunction):
    """x -> factor * child(x) (tropical power)."""

    factor: Fraction
    child: PLFunction

    def __post_init__(self) -> None:
        object.__setattr__(self, "factor", Fraction(self.factor))

    def evaluate(self, x: Fraction) -> TropScalar:
        return self.child.evaluate(x).power(self.factor)

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        if self.factor == 0:
            return []
        return self.child.breakpoints(lo, hi)

    @property
    def is_bottom(self) -> bool:
        return self.child.is_bottom


@dataclass(frozen=True)
class Shift(PLFunction):
    """x -> child(x + offset)."""

    offset: Fraction
    child: PLFunction

    def __post_init__(self) -> None:
        object.__setattr__(self, "offset", Fraction(self.offset))

    def evaluate(self, x: Fraction) -> TropScalar:
        return self.child.evaluate(x + self.offset)

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        c = self.offset
        return [b - c for b in self.child.breakpoints(lo + c, hi + c)]

    @property
    def is_bottom(self) -> bool:
        return self.child.is_bottom


@dataclass(frozen=True)
class Stretch(PLFunction):
    """x -> child(x / factor) for a positive factor."""

    factor: Fraction
    child: PLFunction

    def __post_init__(self) -> None:
        factor = Fraction(self.factor)
        if factor <= 0:
            raise TropDomainError(f"stretch factor must be positive, got {factor}")
        object.__setattr__(self, "factor", factor)

    def evaluate(self, x: Fraction) -> TropScalar:
        return self.child.evaluate(x / self.factor)

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        k = self.factor
        return [b * k for b in self.child.breakpoints(lo / k, hi / k)]

    @property
    def is_bottom(self) -> bool:
        return self.child.is_bottom
