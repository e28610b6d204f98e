"""Closed-form special functions with breakpoints on translated integer lattices."""

import logging
import math
from abc import abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..config import Config
from ..core import PLFunction, const, otimes, power, shift, stretch
from ..errors import BracketContinuityError, TropDomainError
from ..models import TropScalar
from .profiles import AntiPeriodicProfile, PeriodicProfile

logger = logging.getLogger(__name__)

Number = Fraction | int | str


def _split(x: Fraction) -> tuple[int, Fraction]:
    """Return ([x], x - [x])."""
    k = math.floor(x)
    return k, x - k


class LatticeGenerator(PLFunction):
    """
    Generator whose breakpoint candidates are k + t for every integer k and
    every offset t of a fixed finite set in [0, 1).
    """

    @property
    @abstractmethod
    def offsets(self) -> tuple[Fraction, ...]:
        """Offsets in [0, 1) of the breakpoint lattice."""
        pass

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        points = []
        for k in range(math.floor(lo) - 1, math.floor(hi) + 1):
            for t in self.offsets:
                p = k + t
                if lo <= p <= hi:
                    points.append(p)
        return sorted(set(points))


@dataclass(frozen=True)
class Sawtooth(LatticeGenerator):
    """pi^(a,b)(x) = (1/(a+b)) min{a(x-[x]), -b((x-[x])-1)}."""

    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        a, b = Fraction(self.a), Fraction(self.b)
        if a <= 0 or b <= 0:
            raise TropDomainError(f"sawtooth needs a > 0 and b > 0, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return (Fraction(0), self.b / (self.a + self.b))

    @property
    def profile(self) -> PeriodicProfile:
        return PeriodicProfile.sawtooth(self.a, self.b)

    def evaluate(self, x: Fraction) -> TropScalar:
        _, t = _split(x)
        return TropScalar(min(self.a * t, -self.b * (t - 1)) / (self.a + self.b))


@dataclass(frozen=True)
class TropExp(LatticeGenerator):
    """
    Tropical exponential e_base, the solution of y(x+1) = base * y(x) with
    breakpoints at the integers.
    """

    base: Fraction

    def __post_init__(self) -> None:
        base = Fraction(self.base)
        if base in (-1, 0, 1):
            hint = {
                1: "use a periodic function (Pi) for base 1",
                -1: "use an anti-periodic function (Xi) for base -1",
                0: "base 0 has no exponential",
            }[int(base)]
            raise TropDomainError(f"trop_exp base must not be -1, 0 or 1, got {base}; {hint}")
        object.__setattr__(self, "base", base)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return (Fraction(0),)

    @property
    def root_offset(self) -> Fraction:
        """x0 = 1/(1 - base); for a negative base e vanishes exactly on x0 + Z."""
        return 1 / (1 - self.base)

    def evaluate(self, x: Fraction) -> TropScalar:
        k, t = _split(x)
        scale = self.base**k
        if abs(self.base) > 1:
            return TropScalar(scale * (t + 1 / (self.base - 1)))
        return TropScalar(scale * (1 / (1 - self.base) - t))


@dataclass(frozen=True)
class Psi(LatticeGenerator):
    """Psi(x) = ([x]+1)x - [x]([x]+1)/2, the entire solution of f(x) - f(x-1) = x."""

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return (Fraction(0),)

    def evaluate(self, x: Fraction) -> TropScalar:
        k, _ = _split(x)
        return TropScalar((k + 1) * x - Fraction(k * (k + 1), 2))


@dataclass(frozen=True)
class Upsilon(LatticeGenerator):
    """Upsilon(x) = [x]([x]+1)(2(x-[x]) + x - 1)/6, so that Upsilon(x+1) - Upsilon(x) = Psi(x)."""

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return (Fraction(0),)

    def evaluate(self, x: Fraction) -> TropScalar:
        k, t = _split(x)
        return TropScalar(Fraction(k * (k + 1), 6) * (2 * t + x - 1))


@dataclass(frozen=True)
class Periodic(LatticeGenerator):
    """Periodic extension of a profile."""

    profile: PeriodicProfile

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return self.profile.offsets

    def evaluate(self, x: Fraction) -> TropScalar:
        _, t = _split(x)
        return TropScalar(self.profile.value_at(t))


@dataclass(frozen=True)
class AntiPeriodic(LatticeGenerator):
    """Anti-periodic extension Xi(x) = (-1)^[x] p(x - [x])."""

    profile: AntiPeriodicProfile

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return self.profile.offsets

    def evaluate(self, x: Fraction) -> TropScalar:
        k, t = _split(x)
        sign = -1 if k % 2 else 1
        return TropScalar(sign * self.profile.value_at(t))


@dataclass(frozen=True)
class _LadderGenerator(LatticeGenerator):
    """c([x]) * (Pi(x) - Pi(0)) for an integer-polynomial weight c."""

    profile: PeriodicProfile

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return self.profile.offsets

    @staticmethod
    @abstractmethod
    def weight(k: int) -> Fraction:
        pass

    def evaluate(self, x: Fraction) -> TropScalar:
        k, t = _split(x)
        return TropScalar(self.weight(k) * (self.profile.value_at(t) - self.profile.anchor))


class Phi(_LadderGenerator):
    """Phi(x, Pi) = [x](Pi(x) - Pi(0))."""

    @staticmethod
    def weight(k: int) -> Fraction:
        return Fraction(k)


class Theta(_LadderGenerator):
    """Theta(x, Pi) = (1 + [x]([x]-1)/2)(Pi(x) - Pi(0))."""

    @staticmethod
    def weight(k: int) -> Fraction:
        return 1 + Fraction(k * (k - 1), 2)


class Omega(_LadderGenerator):
    """Omega(x, Pi) = ([x-1] + [x][x-1][x-2]/6)(Pi(x) - Pi(0))."""

    @staticmethod
    def weight(k: int) -> Fraction:
        return (k - 1) + Fraction(k * (k - 1) * (k - 2), 6)


@dataclass(frozen=True)
class Bracket(PLFunction):
    """
    x -> [x - x0] * g(x).

    Continuity needs g to vanish on x0 + Z; that is checked on the
    validation window when the node is built.
    """

    g: PLFunction
    x0: Fraction
    window: tuple[Fraction, Fraction] = field(default_factory=Config.get_bracket_window)

    def __post_init__(self) -> None:
        x0 = Fraction(self.x0)
        object.__setattr__(self, "x0", x0)
        if self.g.is_bottom:
            raise TropDomainError("bracket of the -inf function is undefined")
        lo, hi = self.window
        for k in range(math.ceil(lo - x0), math.floor(hi - x0) + 1):
            point = x0 + k
            value = self.g.value(point)
            if value != 0:
                raise BracketContinuityError(point, value)
        logger.debug("bracket lattice %s + Z verified on [%s, %s]", x0, lo, hi)

    def evaluate(self, x: Fraction) -> TropScalar:
        return TropScalar(math.floor(x - self.x0) * self.g.value(x))

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list[Fraction]:
        lattice = [
            self.x0 + k
            for k in range(math.ceil(lo - self.x0), math.floor(hi - self.x0) + 1)
        ]
        return sorted(set(lattice).union(self.g.breakpoints(lo, hi)))


def sawtooth(a: Number = 1, b: Number = 1) -> Sawtooth:
    return Sawtooth(Fraction(a), Fraction(b))


def trop_exp(base: Number) -> TropExp:
    return TropExp(Fraction(base))


def exp_combination(
    base: Number,
    terms: Sequence[tuple[Number, Number]],
    dilation: Number = 1,
) -> PLFunction:
    """
    Sum of coeff * e_base(x/dilation - shift) over (coeff, shift) terms.

    Raises:
        TropDomainError: If a shift lies outside [0, 1) or the base is invalid.
    """
    exp = trop_exp(base)
    parts = []
    for coeff, offset in terms:
        offset = Fraction(offset)
        if not 0 <= offset < 1:
            raise TropDomainError(
                f"exp_combination shift {offset} outside [0, 1); "
                "normalise with e_c(x+1-b) = c e_c(x-b) first"
            )
        parts.append(power(shift(exp, -offset), coeff))
    if not parts:
        return const(0)
    return stretch(otimes(*parts), dilation)


def psi() -> Psi:
    return Psi()


def psi_period(q: Number) -> PLFunction:
    """F_q(x) = q Psi(x/q), the entire solution of F(x) - F(x-q) = x."""
    q = Fraction(q)
    if q <= 0:
        raise TropDomainError(f"period must be positive, got {q}")
    return power(stretch(Psi(), q), q)


def upsilon() -> Upsilon:
    return Upsilon()


def phi(profile: PeriodicProfile) -> Phi:
    return Phi(profile)


def theta(profile: PeriodicProfile) -> Theta:
    return Theta(profile)


def omega_special(profile: PeriodicProfile) -> Omega:
    return Omega(profile)


def bracket(
    g: PLFunction, x0: Number, window: tuple[Number, Number] | None = None
) -> Bracket:
    if window is None:
        return Bracket(g, Fraction(x0))
    return Bracket(g, Fraction(x0), (Fraction(window[0]), Fraction(window[1])))


def periodic_from_profile(profile: PeriodicProfile) -> Periodic:
    return Periodic(profile)


def antiperiodic_from_profile(profile: AntiPeriodicProfile) -> AntiPeriodic:
    return AntiPeriodic(profile)


def xi_triangle() -> AntiPeriodic:
    """The anti-periodic tent, default instance of a free Xi."""
    return AntiPeriodic(AntiPeriodicProfile.triangle())


def pi_a(a: Number) -> Periodic:
    """max{(1-a)([x]-x), a([-x]+x)} for 0 <= a < 1."""
    return Periodic(PeriodicProfile.pi_a(a))
