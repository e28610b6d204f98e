from .equation import EquationSpec
from .terms import (
    Term,
    ConstantTerm,
    LinearTerm,
    PsiTerm,
    UpsilonTerm,
    PeriodicSlot,
    AnchoredTerm,
    PhiTerm,
    ThetaTerm,
    OmegaTerm,
    AntiPeriodicSlot,
    ExpComb,
    BracketTerm,
    ScaledTerm,
    Combination,
)
from .factor import Factorization, CubicReduction, factor_characteristic
from .chain import Stage
from .cases import CASES, CaseInfo, classify, thm_b_label
from .family import SolutionFamily
from .solve import (
    solve,
    solve_two_term,
    solve_three_term,
    solve_four_term,
    solve_second_order_homogeneous,
    solve_coefficients,
)
from .instantiate import instantiate, default_slot_value, zero_params, random_params
from .residual import residual, default_grid

__all__ = [
    "EquationSpec",
    "Term",
    "ConstantTerm",
    "LinearTerm",
    "PsiTerm",
    "UpsilonTerm",
    "PeriodicSlot",
    "AnchoredTerm",
    "PhiTerm",
    "ThetaTerm",
    "OmegaTerm",
    "AntiPeriodicSlot",
    "ExpComb",
    "BracketTerm",
    "ScaledTerm",
    "Combination",
    "Factorization",
    "CubicReduction",
    "factor_characteristic",
    "Stage",
    "CASES",
    "CaseInfo",
    "classify",
    "thm_b_label",
    "SolutionFamily",
    "solve",
    "solve_two_term",
    "solve_three_term",
    "solve_four_term",
    "solve_second_order_homogeneous",
    "solve_coefficients",
    "instantiate",
    "default_slot_value",
    "zero_params",
    "random_params",
    "residual",
    "default_grid",
]
