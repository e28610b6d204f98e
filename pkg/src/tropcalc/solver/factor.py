"""Exact factorization of characteristic polynomials over the rationals."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import sympy as sp

logger = logging.getLogger(__name__)

_LAMBDA = sp.Symbol("lam")


def _to_fraction(value) -> Fraction:
    rational = sp.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _to_rational(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class IrreducibleFactor:
    """A monic irreducible factor of degree >= 2 with its root type."""

    coefficients: tuple[Fraction, ...]
    multiplicity: int
    real_roots: bool

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def even_square(self) -> Optional[Fraction]:
        """mu when the factor is lambda^2 - mu, else None."""
        if self.degree == 2 and self.coefficients[1] == 0:
            return -self.coefficients[2]
        return None


@dataclass(frozen=True)
class Factorization:
    """
    Rational roots (with multiplicity) and the remaining irreducible factors
    of P(lambda) = sum_j n_j lambda^j.
    """

    roots: tuple[Fraction, ...]
    irreducible: tuple[IrreducibleFactor, ...] = field(default=())

    @property
    def fully_rational(self) -> bool:
        return not self.irreducible

    @property
    def even_square(self) -> Optional[Fraction]:
        """mu of a single simple factor lambda^2 - mu, if that is all that is left."""
        if len(self.irreducible) != 1:
            return None
        factor = self.irreducible[0]
        if factor.multiplicity != 1:
            return None
        return factor.even_square

    @property
    def chainable(self) -> bool:
        """True when every stage of the reduction chain has an exact rational root or an even square."""
        return self.fully_rational or self.even_square is not None

    @property
    def has_complex_roots(self) -> bool:
        return any(not factor.real_roots for factor in self.irreducible)


def characteristic_polynomial(coefficients: Sequence[Fraction]) -> sp.Poly:
    return sp.Poly([_to_rational(Fraction(n)) for n in reversed(coefficients)], _LAMBDA, domain="QQ")


def factor_characteristic(coefficients: Sequence[Fraction]) -> Factorization:
    """
    Factor P(lambda) = sum_j n_j lambda^j over QQ.

    Raises:
        ValueError: If the polynomial is zero.
    """
    poly = characteristic_polynomial(coefficients)
    if poly.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    _, factors = poly.factor_list()
    roots: list[Fraction] = []
    irreducible: list[IrreducibleFactor] = []
    for factor, multiplicity in factors:
        coeffs = [_to_fraction(c) for c in factor.all_coeffs()]
        lead = coeffs[0]
        monic = tuple(c / lead for c in coeffs)
        if factor.degree() == 1:
            roots.extend([-monic[1]] * multiplicity)
            continue
        real_roots = factor.count_roots() == factor.degree()
        irreducible.append(IrreducibleFactor(monic, multiplicity, real_roots))
    roots.sort()
    logger.debug("factored %s: roots %s, irreducible %s", poly.as_expr(), roots, irreducible)
    return Factorization(tuple(roots), tuple(irreducible))


@dataclass(frozen=True)
class CubicReduction:
    """
    Roots xi_1, xi_2, xi_3 of lambda^3 + (p/q) lambda^2 + (m/q) lambda + n/q
    used by the cascade of first-order equations for s = 3 with a
    non-vanishing coefficient sum.
    """

    coefficients: tuple[Fraction, Fraction, Fraction, Fraction]
    roots: tuple[Fraction, Fraction, Fraction]

    @property
    def minus_one_is_root(self) -> bool:
        return Fraction(-1) in self.roots

    def vieta_holds(self) -> bool:
        n, m, p, q = self.coefficients
        x1, x2, x3 = self.roots
        return (
            x1 + x2 + x3 == -p / q
            and x1 * x2 + x2 * x3 + x3 * x1 == m / q
            and x1 * x2 * x3 == -n / q
        )

    def to_dict(self) -> dict[str, object]:
        return {
            "roots": [str(r) for r in self.roots],
            "case": 2 if self.minus_one_is_root else 1,
            "vieta": self.vieta_holds(),
        }
