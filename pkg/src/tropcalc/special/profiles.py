from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ..errors import SeamError, TropDomainError

Number = Fraction | int | str


def _normalize_points(points: Iterable[tuple[Number, Number]]) -> tuple[tuple[Fraction, Fraction], ...]:
    normalized = tuple((Fraction(t), Fraction(v)) for t, v in points)
    if not normalized:
        raise TropDomainError("a profile needs at least one point")
    if normalized[0][0] != 0:
        raise TropDomainError(f"profile must start at t=0, got t={normalized[0][0]}")
    previous = None
    for t, _ in normalized:
        if not 0 <= t < 1:
            raise TropDomainError(f"profile abscissa {t} outside [0, 1)")
        if previous is not None and t <= previous:
            raise TropDomainError(f"profile abscissas must increase strictly, got {previous} then {t}")
        previous = t
    return normalized


def _interpolate(
    points: tuple[tuple[Fraction, Fraction], ...], closing: Fraction, t: Fraction
) -> Fraction:
    """Piecewise-linear interpolation on [0, 1) with the segment to (1, closing) last."""
    for (t0, v0), (t1, v1) in zip(points, points[1:] + ((Fraction(1), closing),)):
        if t0 <= t < t1:
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    raise TropDomainError(f"profile parameter {t} outside [0, 1)")


@dataclass(frozen=True)
class PeriodicProfile:
    """
    One period of a 1-periodic piecewise-linear function.

    Attributes:
        points: (t, value) pairs with t strictly increasing in [0, 1), starting
            at t = 0. The last point is joined to (1, value at 0).
        end_value: Optional limit at 1-. When given it must equal the value at 0.
    """

    points: tuple[tuple[Fraction, Fraction], ...]
    end_value: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", _normalize_points(self.points))
        if self.end_value is not None:
            end = Fraction(self.end_value)
            if end != self.anchor:
                raise SeamError(self.anchor, end, kind="periodic")
            object.__setattr__(self, "end_value", end)

    @property
    def anchor(self) -> Fraction:
        """The value d = Pi(0)."""
        return self.points[0][1]

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return tuple(t for t, _ in self.points)

    def value_at(self, t: Fraction) -> Fraction:
        """Profile value for t in [0, 1)."""
        return _interpolate(self.points, self.anchor, t)

    @classmethod
    def constant(cls, d: Number = 0) -> "PeriodicProfile":
        return cls(((Fraction(0), Fraction(d)),))

    @classmethod
    def sawtooth(cls, a: Number = 1, b: Number = 1) -> "PeriodicProfile":
        """Profile of the tent wave with slopes a/(a+b) and -b/(a+b)."""
        a, b = Fraction(a), Fraction(b)
        if a <= 0 or b <= 0:
            raise TropDomainError(f"sawtooth needs a > 0 and b > 0, got a={a}, b={b}")
        peak = b / (a + b)
        return cls(((Fraction(0), Fraction(0)), (peak, a * b / (a + b) ** 2)))

    @classmethod
    def pi_a(cls, a: Number) -> "PeriodicProfile":
        """Profile of max{(1-a)([x]-x), a([-x]+x)}, a valley of depth a(1-a) at t=a."""
        a = Fraction(a)
        if not 0 <= a < 1:
            raise TropDomainError(f"pi_a needs 0 <= a < 1, got a={a}")
        if a == 0:
            return cls.constant(0)
        return cls(((Fraction(0), Fraction(0)), (a, -a * (1 - a))))


@dataclass(frozen=True)
class AntiPeriodicProfile:
    """
    Values on [0, 1) of a function with Xi(x+1) = -Xi(x).

    Attributes:
        points: (t, value) pairs as for PeriodicProfile. The last point is
            joined to (1, -value at 0).
        end_value: Optional limit at 1-. When given it must equal minus the value at 0.
    """

    points: tuple[tuple[Fraction, Fraction], ...]
    end_value: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", _normalize_points(self.points))
        if self.end_value is not None:
            end = Fraction(self.end_value)
            if end != -self.points[0][1]:
                raise SeamError(-self.points[0][1], end, kind="anti-periodic")
            object.__setattr__(self, "end_value", end)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return tuple(t for t, _ in self.points)

    def value_at(self, t: Fraction) -> Fraction:
        return _interpolate(self.points, -self.points[0][1], t)

    @property
    def x0(self) -> Fraction:
        """Smallest t in [0, 1) with Xi(t) = 0."""
        closing = ((Fraction(1), -self.points[0][1]),)
        for (t0, v0), (t1, v1) in zip(self.points, self.points[1:] + closing):
            if v0 == 0:
                return t0
            if v0 * v1 < 0:
                return t0 + (t1 - t0) * v0 / (v0 - v1)
        # unreachable: the closing value has the opposite sign of the first one
        raise TropDomainError("anti-periodic profile has no zero in [0, 1)")

    @classmethod
    def triangle(cls) -> "AntiPeriodicProfile":
        """The tent min(t, 1-t) on [0, 1)."""
        return cls(((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))))
