"""
Tropcalc

Exact max-plus piecewise-linear functions, tropical special functions,
Nevanlinna functionals and a solver for linear difference equations of
order at most three.
"""

from .core import PLFunction, const, linear, finite_pl, oplus, otimes, oslash, power, shift, stretch
from .models import TropScalar, FamilyStatus, BruckAlternative
from .nevanlinna import proximity, counting, characteristic, nevanlinna_report
from .solver import EquationSpec, SolutionFamily, solve, instantiate, residual
from .analysis import fermat_sum_check, hayman_census, hayman_linearity_check, bruck_check
from .search import WindowScanner

__version__ = "0.1.0"

__all__ = [
    "PLFunction",
    "const",
    "linear",
    "finite_pl",
    "oplus",
    "otimes",
    "oslash",
    "power",
    "shift",
    "stretch",
    "TropScalar",
    "FamilyStatus",
    "BruckAlternative",
    "proximity",
    "counting",
    "characteristic",
    "nevanlinna_report",
    "EquationSpec",
    "SolutionFamily",
    "solve",
    "instantiate",
    "residual",
    "fermat_sum_check",
    "hayman_census",
    "hayman_linearity_check",
    "bruck_check",
    "WindowScanner",
]
