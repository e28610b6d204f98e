from fractions import Fraction
from typing import Iterable

from ..errors import SpecParseError
from ..models import TropScalar

BOTTOM_TEXT = "-inf"


def parse_rational(text: str | int | Fraction) -> Fraction:
    """
    Parse an exact rational number.

    Supports formats:
    - integers: "3", "-2"
    - fractions: "1/3", "-7/2"
    - finite decimals: "0.25"

    Raises:
        SpecParseError: If the text is not a rational number.
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise SpecParseError(f"Expected a number as a string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise SpecParseError(f"Invalid rational number: {text!r}") from e


def parse_scalar(text: str | int | Fraction) -> TropScalar:
    """Parse a rational or "-inf"."""
    if isinstance(text, str) and text.strip().lower() == BOTTOM_TEXT:
        return TropScalar.BOTTOM
    return TropScalar(parse_rational(text))


def format_rational(value: Fraction | int) -> str:
    """Exact "p/q" text, or "p" for integers."""
    return str(Fraction(value))


def parse_window(text: str) -> tuple[Fraction, Fraction]:
    """
    Parse "LO:HI" into a window with lo < hi.

    Raises:
        SpecParseError: If the format is wrong or lo >= hi.
    """
    parts = text.split(":")
    if len(parts) != 2:
        raise SpecParseError(f"Window must look like LO:HI, got {text!r}")
    lo, hi = parse_rational(parts[0]), parse_rational(parts[1])
    if lo >= hi:
        raise SpecParseError(f"Window must satisfy lo < hi, got {text!r}")
    return lo, hi


def parse_coefficients(tokens: Iterable[str]) -> list[Fraction]:
    """
    Parse coefficients given as separate tokens or one quoted list.

    Both ("1", "-2", "1") and ("1 -2 1",) give [1, -2, 1]; commas also separate.

    Raises:
        SpecParseError: If a token is not rational or there are none.
    """
    coefficients = [
        parse_rational(piece)
        for token in tokens
        for piece in token.replace(",", " ").split()
    ]
    if not coefficients:
        raise SpecParseError("At least one coefficient is required")
    return coefficients


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse "1,2,1/2" (commas or spaces)."""
    return parse_coefficients([text])
