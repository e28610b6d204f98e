"""Entry points of the symbolic solver."""

import logging
from fractions import Fraction
from typing import Sequence

from ..models import FamilyStatus
from .cases import CASES, IRRATIONAL_LABELS, NOTE_IRRATIONAL, CaseInfo, classify_case, thm_b_label
from .chain import run_chain, plan_stages
from .equation import EquationSpec, Number
from .factor import CubicReduction, Factorization, factor_characteristic
from .family import SolutionFamily
from .terms import Combination, ConstantTerm, LinearTerm, ScaledTerm

logger = logging.getLogger(__name__)


def _normalized_rhs(spec: EquationSpec) -> Combination:
    lead = spec.coefficients[-1]
    rhs = Combination()
    rhs.add(LinearTerm(), spec.rhs_slope / lead)
    rhs.add(ConstantTerm(), spec.rhs / lead)
    return rhs


def _affine_particular(spec: EquationSpec) -> Combination:
    """Particular solution of the form Ax + B, when one exists."""
    total = sum(spec.coefficients, Fraction(0))
    moment = sum((j * n for j, n in enumerate(spec.coefficients)), Fraction(0))
    result = Combination()
    if total != 0:
        slope = spec.rhs_slope / total
        result.add(LinearTerm(), slope)
        result.add(ConstantTerm(), (spec.rhs - slope * moment) / total)
    elif spec.rhs_slope == 0 and moment != 0:
        result.add(LinearTerm(), spec.rhs / moment)
    return result


def _cubic_reduction(spec: EquationSpec, factorization: Factorization) -> CubicReduction | None:
    if spec.order != 3 or sum(spec.coefficients) == 0 or not factorization.fully_rational:
        return None
    cubic = CubicReduction(spec.coefficients, factorization.roots)
    if not cubic.vieta_holds():
        raise ArithmeticError(f"Vieta identities fail for roots {cubic.roots} of {spec.coefficients}")
    return cubic


def _solve(spec: EquationSpec, case: CaseInfo | None = None) -> SolutionFamily:
    trimmed, argument_shift = spec.trimmed()
    factorization = factor_characteristic(trimmed.coefficients)
    if case is None:
        case = classify_case(trimmed, factorization)
    logger.debug("solving %s as %s", trimmed, case.label)

    if not factorization.chainable:
        note = case.note or NOTE_IRRATIONAL
        particular = _affine_particular(trimmed)
        return SolutionFamily(
            spec=spec,
            status=FamilyStatus.OPEN,
            case_label=case.label,
            terms=tuple(ScaledTerm(coeff, term) for term, coeff in particular.items()),
            open_note=note,
            argument_shift=argument_shift,
        )

    stages = plan_stages(factorization)
    chain = run_chain(_normalized_rhs(trimmed), stages)
    status = case.status.weaker(chain.status)
    notes = [case.note] if case.note else []
    notes.extend(chain.notes)
    combination = chain.combination
    if chain.status == FamilyStatus.OPEN:
        combination = _affine_particular(trimmed)
    family = SolutionFamily(
        spec=spec,
        status=status,
        case_label=case.label,
        terms=tuple(ScaledTerm(coeff, term) for term, coeff in combination.items()),
        open_note="; ".join(notes) if status != FamilyStatus.COMPLETE else None,
        argument_shift=argument_shift,
        stages=tuple(stages),
        cubic=_cubic_reduction(trimmed, factorization),
    )
    logger.info("%s", family)
    return family


def solve(spec: EquationSpec) -> SolutionFamily:
    """
    Solve sum_j n_j y(x+j) = rhs_slope * x + rhs for s <= 3.

    Raises:
        DegenerateEquationError: If every coefficient is zero.
    """
    return _solve(spec)


def _require_order(spec: EquationSpec, order: int, name: str) -> None:
    if spec.order != order:
        raise ValueError(f"{name} needs {order + 1} coefficients, got {len(spec.coefficients)}")


def solve_two_term(spec: EquationSpec) -> SolutionFamily:
    """alpha y(x) + beta y(x+1) = c."""
    _require_order(spec, 1, "solve_two_term")
    return _solve(spec)


def solve_three_term(spec: EquationSpec) -> SolutionFamily:
    """n y(x) + m y(x+1) + p y(x+2) = c."""
    _require_order(spec, 2, "solve_three_term")
    return _solve(spec)


def solve_four_term(spec: EquationSpec) -> SolutionFamily:
    """n y(x) + m y(x+1) + p y(x+2) + q y(x+3) = c."""
    _require_order(spec, 3, "solve_four_term")
    return _solve(spec)


def solve_second_order_homogeneous(c: Number, d: Number) -> SolutionFamily:
    """
    F(x+1) - cF(x) + dF(x-1) = 0, written as d F(x) - c F(x+1) + F(x+2) = 0.

    d = 0 reduces to the first-order equation F(x+1) = cF(x).
    """
    c, d = Fraction(c), Fraction(d)
    spec = EquationSpec((d, -c, Fraction(1)))
    if d == 0:
        return _solve(spec)
    label = thm_b_label(c, d)
    if not factor_characteristic(spec.coefficients).chainable:
        label = IRRATIONAL_LABELS.get(label, label)
    return _solve(spec, CASES[label])


def solve_coefficients(coefficients: Sequence[Number], rhs: Number = 0, rhs_slope: Number = 0) -> SolutionFamily:
    return solve(EquationSpec.of(coefficients, rhs, rhs_slope))
