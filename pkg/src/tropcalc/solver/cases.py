"""Case labels of the solution theory and the status each case is known to have."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..models import FamilyStatus
from .equation import EquationSpec
from .factor import Factorization, factor_characteristic

NOTE_THM_B_4 = "it remains open whether the exponential solutions are all solutions"
NOTE_THM_B_6 = "the case c^2 - 4d < 0 remains open"
NOTE_REPEATED = "repeated root of the reduced quadratic: f(x+1) - f(x) = [x - b0] e(x - b) remains open"
NOTE_NEGATIVE_DISCRIMINANT = "negative discriminant of the reduced quadratic remains open"
NOTE_CUBIC_ROOTS = "the cascade assumes that all roots xi_1, xi_2, xi_3 are real and rational"
NOTE_IRRATIONAL = "characteristic roots are irrational; no exact family is produced"
NOTE_AFFINE_TRIPLE_ROOT = "an affine rhs climbs past Upsilon under a triple unit root; no closed-form particular solution"


@dataclass(frozen=True)
class CaseInfo:
    label: str
    status: FamilyStatus = FamilyStatus.COMPLETE
    note: Optional[str] = None


# Every label classify() can return, with the status the case is known to have.
CASES: dict[str, CaseInfo] = {
    info.label: info
    for info in (
        CaseInfo("Thm4.1(beta=0)"),
        CaseInfo("Thm4.1(i)"),
        CaseInfo("Thm4.1(ii)"),
        CaseInfo("Thm4.1(iii)"),
        CaseInfo("ThmB(1)"),
        CaseInfo("ThmB(2)"),
        CaseInfo("ThmB(3)"),
        CaseInfo("ThmB(4)", FamilyStatus.PARTIAL_KNOWN, NOTE_THM_B_4),
        CaseInfo("ThmB(5)"),
        CaseInfo("ThmB(5) irrational roots", FamilyStatus.OPEN, NOTE_IRRATIONAL),
        CaseInfo("ThmB(6)", FamilyStatus.OPEN, NOTE_THM_B_6),
        CaseInfo("ThmB(6) c=0"),
        CaseInfo("§5.1 n=p"),
        CaseInfo("§5.1 m=0"),
        CaseInfo("§5.1 n≠±p"),
        CaseInfo("Thm6.1(1)"),
        CaseInfo("Thm6.1(2)"),
        CaseInfo("Thm6.1(2) affine rhs", FamilyStatus.OPEN, NOTE_AFFINE_TRIPLE_ROOT),
        CaseInfo("Thm6.1(3)"),
        CaseInfo("Thm6.2(1)"),
        CaseInfo("Thm6.2(2)"),
        CaseInfo("Thm6.2(3)"),
        CaseInfo("Thm6.2(4)"),
        CaseInfo("Thm6.2(4) irrational roots", FamilyStatus.OPEN, NOTE_IRRATIONAL),
        CaseInfo("Thm6.2(4) repeated root", FamilyStatus.PARTIAL_KNOWN, NOTE_REPEATED),
        CaseInfo("Remark 6.3", FamilyStatus.OPEN, NOTE_NEGATIVE_DISCRIMINANT),
        CaseInfo("§6.3 Case 1"),
        CaseInfo("§6.3 Case 2"),
        CaseInfo("§6.3 non-rational roots", FamilyStatus.OPEN, NOTE_CUBIC_ROOTS),
    )
}


# Complete cases whose closed form needs rational roots.
IRRATIONAL_LABELS = {
    "ThmB(5)": "ThmB(5) irrational roots",
    "Thm6.2(4)": "Thm6.2(4) irrational roots",
}


def thm_b_label(c: Fraction, d: Fraction) -> str:
    """Label of F(x+1) - cF(x) + dF(x-1) = 0 for d != 0."""
    c, d = Fraction(c), Fraction(d)
    if d == 1 and c == 2:
        return "ThmB(1)"
    if d == 1 and c == -2:
        return "ThmB(2)"
    discriminant = c * c - 4 * d
    if discriminant == 0:
        return "ThmB(3)" if c < 0 else "ThmB(4)"
    if discriminant > 0:
        return "ThmB(5)"
    # only c = 0, d = 1 has a closed form: F is anti-2-periodic
    return "ThmB(6) c=0" if c == 0 and d == 1 else "ThmB(6)"


def _two_term_label(alpha: Fraction, beta: Fraction) -> str:
    if alpha == beta:
        return "Thm4.1(i)"
    if alpha == -beta:
        return "Thm4.1(ii)"
    return "Thm4.1(iii)"


def _three_term_label(n: Fraction, m: Fraction, p: Fraction) -> str:
    if n + m + p == 0:
        if n == p:
            return "§5.1 n=p"
        if m == 0:
            return "§5.1 m=0"
        return "§5.1 n≠±p"
    return thm_b_label(-m / p, n / p)


def _four_term_label(
    n: Fraction, m: Fraction, p: Fraction, q: Fraction, factorization: Factorization
) -> str:
    if n + m + p + q == 0:
        if 3 * n + 2 * m + p == 0:
            if 2 * n + m == n:
                return "Thm6.1(1)"
            if 2 * n + m == -n:
                return "Thm6.1(2)"
            return "Thm6.1(3)"
        if n + m == 0:
            return "Thm6.2(1)" if n == p else "Thm6.2(2)"
        total = n + m + p
        a, b = (n + m) / total, n / total
        if a == 2 and b == 1:
            return "Thm6.2(3)"
        discriminant = a * a - 4 * b
        if discriminant == 0:
            return "Thm6.2(4) repeated root"
        if discriminant < 0:
            return "Remark 6.3"
        return "Thm6.2(4)"
    if not factorization.fully_rational:
        return "§6.3 non-rational roots"
    return "§6.3 Case 2" if Fraction(-1) in factorization.roots else "§6.3 Case 1"


def classify_case(spec: EquationSpec, factorization: Optional[Factorization] = None) -> CaseInfo:
    """
    Case of an already trimmed equation.

    Args:
        spec: Equation with non-zero first and last coefficients.
        factorization: Factorization of its characteristic polynomial, computed
            when not given.
    """
    coefficients = spec.coefficients
    if coefficients[0] == 0 or coefficients[-1] == 0:
        raise ValueError(f"classify_case needs a trimmed equation, got {coefficients}")
    if spec.order == 0:
        return CASES["Thm4.1(beta=0)"]
    if spec.order == 1:
        return CASES[_two_term_label(*coefficients)]
    if factorization is None:
        factorization = factor_characteristic(coefficients)
    if spec.order == 2:
        label = _three_term_label(*coefficients)
    else:
        label = _four_term_label(*coefficients, factorization)
    if not factorization.chainable:
        label = IRRATIONAL_LABELS.get(label, label)
    if label == "Thm6.1(2)" and spec.rhs_slope != 0:
        label = "Thm6.1(2) affine rhs"
    return CASES[label]


def classify(spec: EquationSpec) -> str:
    """
    Case label of any equation; leading and trailing zeros are trimmed first.

    Raises:
        DegenerateEquationError: If every coefficient is zero.
    """
    trimmed, _ = spec.trimmed()
    return classify_case(trimmed).label
