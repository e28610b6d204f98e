"""Small worked examples, packaged so they can be rerun from the command line."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from ..core import PLFunction, const, finite_pl, linear, oplus, power
from ..special import pi_a, psi_period
from ..utils.formatting import fermat_to_dict, linearity_to_dict
from .fermat import fermat_sum_check
from .hayman import hayman_linearity_check


def min_one_two_minus_x() -> PLFunction:
    """min(1, 2 - x)."""
    return finite_pl([(1, 1)], left_tail_slope=0, right_tail_slope=-1)


def min_one_x() -> PLFunction:
    """min(1, x)."""
    return finite_pl([(1, 1)], left_tail_slope=1, right_tail_slope=0)


def meromorphic_fermat_family(alphas: Sequence[Fraction | int]) -> list[PLFunction]:
    """
    Non-entire solutions of max_j alpha_j f_j = 1 for positive exponents.

    f_1 = min(1, 2-x)/alpha_1 and f_2 = min(1, x)/alpha_2 already give the
    value 1; every further f_j = min(0, x, 2-x)/alpha_j stays below it.
    """
    alphas = [Fraction(a) for a in alphas]
    if len(alphas) < 2 or any(a <= 0 for a in alphas):
        raise ValueError("need at least two positive exponents")
    filler = finite_pl([(0, 0), (2, 0)], left_tail_slope=1, right_tail_slope=-1)
    functions = [power(min_one_two_minus_x(), 1 / alphas[0]), power(min_one_x(), 1 / alphas[1])]
    functions.extend(power(filler, 1 / a) for a in alphas[2:])
    return functions


def mixed_sign_pair(alpha: Fraction | int = 1, beta: Fraction | int = -1) -> list[PLFunction]:
    """f = 1/alpha and g = max(1/beta, x + 1/beta) for alpha > 0 > beta."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha > 0 > beta:
        raise ValueError(f"need alpha > 0 > beta, got alpha={alpha}, beta={beta}")
    return [const(1 / alpha), oplus(const(1 / beta), linear(1, 1 / beta))]


def product_pair(alpha: Fraction | int, beta: Fraction | int) -> tuple[PLFunction, PLFunction]:
    """f = x + 1/alpha and g = -(alpha/beta) x, so that alpha f + beta g = 1."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0 or beta == 0:
        raise ValueError("exponents must be non-zero")
    return linear(1, 1 / alpha), linear(-alpha / beta)


def _run_min_pair() -> dict[str, Any]:
    return fermat_to_dict(fermat_sum_check([min_one_two_minus_x(), min_one_x()], [1, 1]))


def _run_mixed_signs() -> dict[str, Any]:
    return fermat_to_dict(fermat_sum_check(mixed_sign_pair(1, -1), [1, -1]))


def _run_meromorphic_family() -> dict[str, Any]:
    alphas = [Fraction(1), Fraction(2), Fraction(3)]
    return fermat_to_dict(fermat_sum_check(meromorphic_fermat_family(alphas), alphas))


def _run_pi_a() -> dict[str, Any]:
    return linearity_to_dict(hayman_linearity_check(pi_a(Fraction(1, 2)), 1, Fraction(-1, 2)))


def _run_psi_period() -> dict[str, Any]:
    return linearity_to_dict(hayman_linearity_check(psi_period(2), -1, -2))


def _run_product_pair() -> dict[str, Any]:
    alpha, beta = Fraction(2), Fraction(3)
    f, g = product_pair(alpha, beta)
    points = [Fraction(k, 2) for k in range(-16, 17)]
    holds = all(alpha * f.value(x) + beta * g.value(x) == 1 for x in points)
    return {"alpha": str(alpha), "beta": str(beta), "holds": holds}


@dataclass(frozen=True)
class Example:
    name: str
    description: str
    run: Callable[[], dict[str, Any]]


EXAMPLES: dict[str, Example] = {
    example.name: example
    for example in (
        Example("min-pair", "min(1, 2-x) (+) min(1, x) = 1 with non-entire functions", _run_min_pair),
        Example("mixed-signs", "f^1 (+) g^-1 = 1 for exponents of different signs", _run_mixed_signs),
        Example("meromorphic-family", "three meromorphic solutions of the Fermat-type sum", _run_meromorphic_family),
        Example("pi-a", "pi_1/2(x) + pi_1/2(x - 1/2) is the constant -1/4", _run_pi_a),
        Example("psi-period", "F_2(x - 2) - F_2(x) = -x for F_q(x) = q Psi(x/q)", _run_psi_period),
        Example("product-pair", "alpha (x + 1/alpha) + beta (-(alpha/beta) x) = 1", _run_product_pair),
    )
}


def run_example(name: str) -> dict[str, Any]:
    """
    Run a packaged example by name.

    Raises:
        ValueError: If the name is unknown.
    """
    if name not in EXAMPLES:
        valid = ", ".join(sorted(EXAMPLES))
        raise ValueError(f"Unknown example: {name}. Valid options: {valid}")
    return {"example": name, **EXAMPLES[name].run()}
