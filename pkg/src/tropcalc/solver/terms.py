"""
Symbolic building blocks of solution families.

Each term b satisfies a shift rule b(x+1) = mu_b * b(x) + lower_b(x) with
lower_b a combination of strictly simpler terms. A ladder, when one exists,
gives a term raised with (E - mu_b) raised = b + extra, which is how a
resonant right-hand side is absorbed.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, ClassVar, Iterator, Optional


class Term(ABC):
    """A basis element of a solution family; coefficients live in Combination."""

    kind: ClassVar[str]

    @property
    def slot(self) -> Optional[str]:
        """Id of the free parameter this term depends on, if any."""
        return None

    @abstractmethod
    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        """(mu, lower) with term(x+1) = mu * term(x) + lower(x)."""
        pass

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        """(raised, extra) with (E - mu) raised = term + extra, or None."""
        return None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind}
        if self.slot is not None:
            data["slot"] = self.slot
        return data

    def __str__(self) -> str:
        return self.kind


@dataclass(frozen=True)
class ConstantTerm(Term):
    kind: ClassVar[str] = "constant"

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination()

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        return Combination.single(LinearTerm()), Combination()

    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class LinearTerm(Term):
    kind: ClassVar[str] = "linear"

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination.single(ConstantTerm())

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        return Combination.single(PsiTerm()), Combination.single(ConstantTerm())

    def __str__(self) -> str:
        return "x"


@dataclass(frozen=True)
class PsiTerm(Term):
    kind: ClassVar[str] = "psi"

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination({LinearTerm(): Fraction(1), ConstantTerm(): Fraction(1)})

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        return Combination.single(UpsilonTerm()), Combination()

    def __str__(self) -> str:
        return "Psi(x)"


@dataclass(frozen=True)
class UpsilonTerm(Term):
    kind: ClassVar[str] = "upsilon"

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination.single(PsiTerm())

    def __str__(self) -> str:
        return "Upsilon(x)"


POLYNOMIAL_TERMS = (ConstantTerm, LinearTerm, PsiTerm, UpsilonTerm)


@dataclass(frozen=True)
class PeriodicSlot(Term):
    """A free 1-periodic function Pi_id."""

    id: str
    kind: ClassVar[str] = "periodic"

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination()

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        return (
            Combination.single(PhiTerm(self.id)),
            Combination.single(AnchoredTerm(self.id, ConstantTerm()), Fraction(-1)),
        )

    def __str__(self) -> str:
        return f"Pi_{self.id}(x)"


@dataclass(frozen=True)
class AnchoredTerm(Term):
    """Pi_id(0) times a polynomial-type term."""

    id: str
    inner: Term
    kind: ClassVar[str] = "anchored"

    def __post_init__(self) -> None:
        if not isinstance(self.inner, POLYNOMIAL_TERMS):
            raise TypeError(f"anchored terms wrap 1, x, Psi or Upsilon, got {self.inner}")

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        mu, lower = self.inner.shift_rule()
        return mu, lower.anchored(self.id)

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        rung = self.inner.ladder()
        if rung is None:
            return None
        raised, extra = rung
        return raised.anchored(self.id), extra.anchored(self.id)

    def to_dict(self) -> dict[str, Any]:
        return {**super().to_dict(), "inner": self.inner.to_dict()}

    def __str__(self) -> str:
        return f"Pi_{self.id}(0)*{self.inner}"


@dataclass(frozen=True)
class PhiTerm(Term):
    id: str
    kind: ClassVar[str] = "phi"

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination(
            {PeriodicSlot(self.id): Fraction(1), AnchoredTerm(self.id, ConstantTerm()): Fraction(-1)}
        )

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        return Combination.single(ThetaTerm(self.id)), Combination()

    def __str__(self) -> str:
        return f"Phi(x, Pi_{self.id})"


@dataclass(frozen=True)
class ThetaTerm(Term):
    id: str
    kind: ClassVar[str] = "theta"

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination.single(PhiTerm(self.id))

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        return Combination.single(OmegaTerm(self.id)), Combination()

    def __str__(self) -> str:
        return f"Theta(x, Pi_{self.id})"


@dataclass(frozen=True)
class OmegaTerm(Term):
    id: str
    kind: ClassVar[str] = "omega"

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        return Fraction(1), Combination.single(ThetaTerm(self.id))

    def __str__(self) -> str:
        return f"Omega(x, Pi_{self.id})"


@dataclass(frozen=True)
class AntiPeriodicSlot(Term):
    """A free anti-periodic function Xi_id(x / dilation)."""

    id: str
    dilation: int = 1
    kind: ClassVar[str] = "antiperiodic"

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        if self.dilation != 1:
            raise ValueError(f"no unit shift rule for the dilated term {self}")
        return Fraction(-1), Combination()

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        if self.dilation != 1:
            return None
        return Combination.single(BracketTerm(self), Fraction(-1)), Combination()

    def to_dict(self) -> dict[str, Any]:
        return {**super().to_dict(), "dilation": self.dilation}

    def __str__(self) -> str:
        argument = "x" if self.dilation == 1 else f"x/{self.dilation}"
        return f"Xi_{self.id}({argument})"


@dataclass(frozen=True)
class ExpComb(Term):
    """A free combination sum_j beta_j e_base(x / dilation - b_j)."""

    base: Fraction
    id: str
    dilation: int = 1
    kind: ClassVar[str] = "exp"

    @property
    def slot(self) -> Optional[str]:
        return self.id

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        if self.dilation != 1:
            raise ValueError(f"no unit shift rule for the dilated term {self}")
        return self.base, Combination()

    def ladder(self) -> Optional[tuple["Combination", "Combination"]]:
        if self.dilation != 1 or self.base > 0:
            return None
        return Combination.single(BracketTerm(self), 1 / self.base), Combination()

    def to_dict(self) -> dict[str, Any]:
        return {**super().to_dict(), "base": _fraction_text(self.base), "dilation": self.dilation}

    def __str__(self) -> str:
        argument = "x" if self.dilation == 1 else f"x/{self.dilation}"
        return f"E_{self.id}[e_{self.base}]({argument})"


@dataclass(frozen=True)
class BracketTerm(Term):
    """
    [x - x0] * inner(x), continuous because inner vanishes on x0 + Z.

    For an anti-periodic inner term x0 is the first zero of the chosen
    profile; for e_base(x - b) with base < 0 it is b + 1/(1 - base).
    """

    inner: AntiPeriodicSlot | ExpComb
    kind: ClassVar[str] = "bracket"

    @property
    def slot(self) -> Optional[str]:
        return self.inner.slot

    @property
    def lattice_rule(self) -> str:
        if isinstance(self.inner, ExpComb):
            return f"x0 = b + {_fraction_text(1 / (1 - self.inner.base))} per summand"
        return "x0 = first zero of the profile"

    def shift_rule(self) -> tuple[Fraction, "Combination"]:
        if isinstance(self.inner, ExpComb):
            return self.inner.base, Combination.single(self.inner, self.inner.base)
        return Fraction(-1), Combination.single(self.inner, Fraction(-1))

    def to_dict(self) -> dict[str, Any]:
        return {**super().to_dict(), "inner": self.inner.to_dict(), "rule": self.lattice_rule}

    def __str__(self) -> str:
        return f"[x - x0]*{self.inner}"


def _fraction_text(value: Fraction) -> str:
    return str(Fraction(value))


class Combination:
    """A finite linear combination of terms with exact coefficients."""

    def __init__(self, coefficients: Optional[dict[Term, Fraction]] = None) -> None:
        self._coefficients: dict[Term, Fraction] = {}
        for term, coeff in (coefficients or {}).items():
            self.add(term, coeff)

    @classmethod
    def single(cls, term: Term, coeff: Fraction | int = 1) -> "Combination":
        return cls({term: Fraction(coeff)})

    def add(self, term: Term, coeff: Fraction | int) -> None:
        total = self._coefficients.get(term, Fraction(0)) + Fraction(coeff)
        if total == 0:
            self._coefficients.pop(term, None)
        else:
            self._coefficients[term] = total

    def __add__(self, other: "Combination") -> "Combination":
        result = Combination(self._coefficients)
        for term, coeff in other.items():
            result.add(term, coeff)
        return result

    def scaled(self, factor: Fraction | int) -> "Combination":
        return Combination({term: coeff * factor for term, coeff in self.items()})

    def anchored(self, slot: str) -> "Combination":
        return Combination({AnchoredTerm(slot, term): coeff for term, coeff in self.items()})

    def shifted(self) -> "Combination":
        """The combination of x -> self(x + 1)."""
        result = Combination()
        for term, coeff in self.items():
            mu, lower = term.shift_rule()
            result.add(term, coeff * mu)
            result = result + lower.scaled(coeff)
        return result

    def without_slot(self, slot: str) -> "Combination":
        return Combination({term: coeff for term, coeff in self.items() if term.slot != slot})

    def items(self) -> Iterator[tuple[Term, Fraction]]:
        return iter(list(self._coefficients.items()))

    def slots(self) -> list[str]:
        seen: list[str] = []
        for term, _ in self.items():
            if term.slot is not None and term.slot not in seen:
                seen.append(term.slot)
        return seen

    def __len__(self) -> int:
        return len(self._coefficients)

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Combination):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __repr__(self) -> str:
        return f"Combination({self._coefficients!r})"

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        return " + ".join(f"({coeff})*{term}" for term, coeff in self.items())


@dataclass(frozen=True)
class ScaledTerm:
    """coeff * term, one entry of a solution family."""

    coeff: Fraction
    term: Term

    def to_dict(self) -> dict[str, Any]:
        return {"coeff": _fraction_text(self.coeff), **self.term.to_dict()}

    def __str__(self) -> str:
        return f"({self.coeff})*{self.term}"
