class TropError(ValueError):
    """Base class for every error raised by tropcalc."""


class SpecParseError(TropError):
    """A function document, number or coefficient list could not be parsed."""


class TropDomainError(TropError):
    """An evaluation or constructor argument lies outside its domain."""


class SeamError(TropDomainError):
    """A periodic or anti-periodic profile does not close continuously."""

    def __init__(self, expected, actual, kind: str = "periodic") -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{kind} profile seam mismatch: limit at 1- is {actual}, "
            f"extension requires {expected}"
        )


class BracketContinuityError(TropDomainError):
    """[x - x0] * g(x) would be discontinuous because g does not vanish on x0 + Z."""

    def __init__(self, witness, value) -> None:
        self.witness = witness
        self.value = value
        super().__init__(
            f"bracket factor does not vanish on the lattice: g({witness}) = {value}"
        )


class DegenerateEquationError(TropError):
    """All coefficients of a difference equation are zero."""


class OpenFamilyError(TropError):
    """A solution family with status Open cannot be instantiated."""
