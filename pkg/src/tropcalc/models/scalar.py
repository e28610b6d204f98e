from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from ..errors import TropDomainError


@dataclass(frozen=True)
class TropScalar:
    """
    Element of the max-plus semiring: an exact rational or Bottom (-inf).

    Attributes:
        value: The rational value, or None for Bottom.
    """

    value: Fraction | None = None

    BOTTOM: ClassVar["TropScalar"]
    ONE: ClassVar["TropScalar"]

    @classmethod
    def of(cls, value: int | Fraction | str) -> "TropScalar":
        """Wrap a rational (or anything Fraction accepts)."""
        return cls(Fraction(value))

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def oplus(self, other: "TropScalar") -> "TropScalar":
        """Tropical addition: max, with Bottom as identity."""
        if self.is_bottom:
            return other
        if other.is_bottom:
            return self
        return self if self.value >= other.value else other

    def otimes(self, other: "TropScalar") -> "TropScalar":
        """Tropical multiplication: +, with Bottom absorbing."""
        if self.is_bottom or other.is_bottom:
            return TropScalar.BOTTOM
        return TropScalar(self.value + other.value)

    def oslash(self, other: "TropScalar") -> "TropScalar":
        """Tropical division: -, undefined for a Bottom divisor."""
        if other.is_bottom:
            raise TropDomainError("tropical division by Bottom (-inf) is undefined")
        if self.is_bottom:
            return TropScalar.BOTTOM
        return TropScalar(self.value - other.value)

    def power(self, alpha: Fraction) -> "TropScalar":
        """Tropical power x^alpha = alpha * x; Bottom stays Bottom."""
        if self.is_bottom:
            return TropScalar.BOTTOM
        return TropScalar(Fraction(alpha) * self.value)

    def __str__(self) -> str:
        return "-inf" if self.is_bottom else str(self.value)


TropScalar.BOTTOM = TropScalar(None)
TropScalar.ONE = TropScalar(Fraction(0))
