"""Max-plus operations on PLFunction trees."""

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import TropDomainError
from ..models import BreakpointEvent, TropScalar
from .base import PLFunction
from .nodes import Const, Difference, FinitePL, Linear, Max, Scale, Shift, Stretch, Sum

Number = Fraction | int | str


def const(value: Number | TropScalar) -> Const:
    """Constant function; pass TropScalar.BOTTOM for -inf."""
    if isinstance(value, TropScalar):
        return Const(value)
    return Const(TropScalar.of(value))


def bottom() -> Const:
    return Const(TropScalar.BOTTOM)


def linear(slope: Number, intercept: Number = 0) -> Linear:
    return Linear(Fraction(slope), Fraction(intercept))


def finite_pl(
    points: Iterable[tuple[Number, Number]],
    left_tail_slope: Number = 0,
    right_tail_slope: Number = 0,
) -> FinitePL:
    return FinitePL(tuple(points), Fraction(left_tail_slope), Fraction(right_tail_slope))


def tropical_polynomial(terms: Sequence[tuple[Number, Number]]) -> PLFunction:
    """
    Max of affine terms a_i + s_i * x.

    Args:
        terms: (a_i, s_i) pairs, coefficient first and exponent second.

    Raises:
        TropDomainError: If terms is empty.
    """
    if not terms:
        raise TropDomainError("a tropical polynomial needs at least one term")
    return oplus(*(linear(slope, coeff) for coeff, slope in terms))


def evaluate(f: PLFunction, x: Number) -> TropScalar:
    return f.evaluate(Fraction(x))


def oplus(*functions: PLFunction) -> PLFunction:
    """
    Tropical sum (pointwise max).

    Nested maxima are flattened and Bottom children dropped; a single
    surviving child is returned as is.
    """
    children: list[PLFunction] = []
    for f in functions:
        if isinstance(f, Max):
            children.extend(f.children)
        elif not f.is_bottom:
            children.append(f)
    if not children:
        return bottom()
    if len(children) == 1:
        return children[0]
    return Max(tuple(children))


def otimes(*functions: PLFunction) -> PLFunction:
    """Tropical product (pointwise sum)."""
    if len(functions) == 1:
        return functions[0]
    return Sum(tuple(functions))


def oslash(f: PLFunction, g: PLFunction) -> PLFunction:
    """Tropical quotient f - g; evaluation fails where g is Bottom."""
    return Difference(f, g)


def power(f: PLFunction, alpha: Number) -> PLFunction:
    """Tropical power f^alpha = alpha * f."""
    alpha = Fraction(alpha)
    if alpha == 1:
        return f
    return Scale(alpha, f)


def shift(f: PLFunction, c: Number) -> PLFunction:
    """x -> f(x + c)."""
    c = Fraction(c)
    if c == 0:
        return f
    return Shift(c, f)


def stretch(f: PLFunction, k: Number) -> PLFunction:
    """x -> f(x / k) for k > 0."""
    k = Fraction(k)
    if k == 1:
        return f
    return Stretch(k, f)


def omega_jump(f: PLFunction, x0: Number) -> Fraction:
    return f.omega_jump(Fraction(x0))


def events_in(f: PLFunction, lo: Number, hi: Number, closed: bool = False) -> list[BreakpointEvent]:
    return f.events_in(Fraction(lo), Fraction(hi), closed=closed)


def is_entire_on(f: PLFunction, lo: Number, hi: Number) -> bool:
    return f.is_entire_on(Fraction(lo), Fraction(hi))
