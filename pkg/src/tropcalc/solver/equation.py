from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..core import PLFunction
from ..errors import DegenerateEquationError

Number = Fraction | int | str


@dataclass(frozen=True)
class EquationSpec:
    """
    The difference equation sum_j n_j y(x+j) = rhs_slope * x + rhs.

    Attributes:
        coefficients: n_0 .. n_s. For four terms these are (n, m, p, q); for
            two terms (alpha, beta).
        rhs: Constant part c of the right-hand side.
        rhs_slope: Affine part of the right-hand side (0 for constant rhs).
    """

    coefficients: tuple[Fraction, ...]
    rhs: Fraction = Fraction(0)
    rhs_slope: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        coefficients = tuple(Fraction(n) for n in self.coefficients)
        if not 1 <= len(coefficients) <= 4:
            raise ValueError(
                f"Equations need between 1 and 4 coefficients (s <= 3), got {len(coefficients)}"
            )
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        object.__setattr__(self, "rhs_slope", Fraction(self.rhs_slope))

    @classmethod
    def of(cls, coefficients: Sequence[Number], rhs: Number = 0, rhs_slope: Number = 0) -> "EquationSpec":
        return cls(tuple(Fraction(n) for n in coefficients), Fraction(rhs), Fraction(rhs_slope))

    @property
    def order(self) -> int:
        """s, the largest shift."""
        return len(self.coefficients) - 1

    @property
    def is_homogeneous(self) -> bool:
        return self.rhs == 0 and self.rhs_slope == 0

    def trimmed(self) -> tuple["EquationSpec", int]:
        """
        Drop zero coefficients at both ends.

        Returns:
            The trimmed equation and the number k of leading zeros removed.
            A solution z of the trimmed equation gives y(x) = z(x - k).

        Raises:
            DegenerateEquationError: If every coefficient is zero.
        """
        nonzero = [j for j, n in enumerate(self.coefficients) if n != 0]
        if not nonzero:
            if self.is_homogeneous:
                raise DegenerateEquationError(
                    "all coefficients are zero: every function solves 0 = 0"
                )
            raise DegenerateEquationError(
                f"all coefficients are zero but rhs is {self.rhs_slope}x + {self.rhs}: no solution"
            )
        first, last = nonzero[0], nonzero[-1]
        trimmed = EquationSpec(self.coefficients[first:last + 1], self.rhs, self.rhs_slope)
        return trimmed, first

    def rhs_at(self, x: Fraction) -> Fraction:
        return self.rhs_slope * x + self.rhs

    def defect(self, f: PLFunction, x: Fraction) -> Fraction:
        """sum_j n_j f(x+j) minus the right-hand side, at x."""
        total = sum(
            (n * f.value(x + j) for j, n in enumerate(self.coefficients) if n != 0),
            Fraction(0),
        )
        return total - self.rhs_at(x)

    def __str__(self) -> str:
        parts = [f"({n})y(x+{j})" for j, n in enumerate(self.coefficients) if n != 0]
        rhs = f"{self.rhs_slope}x + {self.rhs}" if self.rhs_slope else str(self.rhs)
        return " + ".join(parts or ["0"]) + f" = {rhs}"
