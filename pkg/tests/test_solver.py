"""
Symbolic solver: classification, statuses, closed forms and exact residuals.

Soundness is checked by instantiating every non-open family with randomised
slot values and evaluating the residual exactly on a mixed rational grid.
"""

import logging
import random
from fractions import Fraction

import pytest

from tropcalc.core import const
from tropcalc.errors import DegenerateEquationError, OpenFamilyError, TropDomainError
from tropcalc.models import FamilyStatus
from tropcalc.solver import (
    CASES,
    AntiPeriodicSlot,
    ConstantTerm,
    EquationSpec,
    ExpComb,
    LinearTerm,
    PeriodicSlot,
    classify,
    default_grid,
    factor_characteristic,
    instantiate,
    random_params,
    residual,
    solve,
    solve_coefficients,
    solve_four_term,
    solve_second_order_homogeneous,
    solve_three_term,
    solve_two_term,
    zero_params,
)

WINDOW = (Fraction(-8), Fraction(8))

# (coefficients, rhs, rhs_slope) of every family checked for soundness
SOUND_EQUATIONS = [
    ((4,), 2, 1),
    ((1, 1), 1, 0),
    ((1, -1), 3, 0),
    ((1, -1), 0, 1),
    ((1, 2), 1, 0),
    ((2, -3), 1, 2),
    ((0, 1, 2), 1, 0),
    ((1, -2, 1), 1, 0),
    ((1, -2, 1), 0, 1),
    ((1, 0, -1), 2, 0),
    ((1, -3, 2), 1, 1),
    ((1, 2, 1), 1, 0),
    ((4, 4, 1), 1, 0),
    ((4, -4, 1), 1, 0),
    ((6, -5, 1), 2, 0),
    ((1, 0, 1), 1, 0),
    ((-2, 0, 1), 1, 0),
    ((1, -1, -1, 1), 1, 0),
    ((1, -3, 3, -1), 1, 0),
    ((1, 0, -3, 2), 1, 0),
    ((1, -1, 1, -1), 1, 0),
    ((1, -1, 2, -2), 1, 0),
    ((1, 1, -1, -1), 1, 0),
    ((-6, 11, -6, 1), 1, 0),
    ((4, 0, -3, -1), 1, 0),
    ((-24, 26, -9, 1), 1, 1),
    ((6, 1, -4, 1), 2, 0),
]


def _coefficients(family):
    return {scaled.term: scaled.coeff for scaled in family.terms}


class TestEquationSpec:
    """Construction, trimming and defects."""

    def test_order(self):
        assert EquationSpec.of([1, 2, 3]).order == 2

    def test_too_many_coefficients(self):
        with pytest.raises(ValueError):
            EquationSpec.of([1, 2, 3, 4, 5])

    def test_trim_leading_and_trailing_zeros(self):
        trimmed, k = EquationSpec.of([0, 0, 1, 2, 0], 3).trimmed()
        assert trimmed.coefficients == (1, 2)
        assert trimmed.rhs == 3
        assert k == 2

    def test_all_zero_homogeneous(self):
        with pytest.raises(DegenerateEquationError, match="every function"):
            EquationSpec.of([0, 0]).trimmed()

    def test_all_zero_inhomogeneous(self):
        with pytest.raises(DegenerateEquationError, match="no solution"):
            EquationSpec.of([0, 0, 0], 1).trimmed()

    def test_defect(self):
        spec = EquationSpec.of([1, 1], 1)
        assert spec.defect(const(Fraction(1, 2)), Fraction(3, 7)) == 0
        assert spec.defect(const(0), 0) == -1


class TestFactorization:
    """Characteristic polynomials over the rationals."""

    def test_rational_roots(self):
        factorization = factor_characteristic([-6, 11, -6, 1])
        assert factorization.roots == (1, 2, 3)
        assert factorization.fully_rational

    def test_repeated_roots(self):
        assert factor_characteristic([4, 4, 1]).roots == (-2, -2)

    def test_even_square_complex(self):
        factorization = factor_characteristic([1, 0, 1])
        assert factorization.roots == ()
        assert factorization.even_square == -1
        assert factorization.has_complex_roots

    def test_even_square_real(self):
        factorization = factor_characteristic([-2, 0, 1])
        assert factorization.even_square == 2
        assert not factorization.has_complex_roots

    def test_irreducible_not_even(self):
        factorization = factor_characteristic([1, -1, 1])
        assert factorization.even_square is None
        assert not factorization.fully_rational

    def test_mixed(self):
        factorization = factor_characteristic([1, -1, 2, -2])
        assert factorization.roots == (1,)
        assert factorization.even_square == Fraction(-1, 2)


class TestClassification:
    """Case labels of the solution theory."""

    @pytest.mark.parametrize("coefficients,label", [
        ((3,), "Thm4.1(beta=0)"),
        ((2, 2), "Thm4.1(i)"),
        ((2, -2), "Thm4.1(ii)"),
        ((1, 2), "Thm4.1(iii)"),
        ((0, 1, 1), "Thm4.1(i)"),
        ((1, -2, 1), "§5.1 n=p"),
        ((1, 0, -1), "§5.1 m=0"),
        ((1, -3, 2), "§5.1 n≠±p"),
        ((1, 2, 1), "ThmB(2)"),
        ((4, 4, 1), "ThmB(3)"),
        ((4, -4, 1), "ThmB(4)"),
        ((6, -5, 1), "ThmB(5)"),
        ((-1, -1, 1), "ThmB(5) irrational roots"),
        ((1, -1, 1), "ThmB(6)"),
        ((1, 0, 1), "ThmB(6) c=0"),
        ((1, -1, -1, 1), "Thm6.1(1)"),
        ((1, -3, 3, -1), "Thm6.1(2)"),
        ((1, 0, -3, 2), "Thm6.1(3)"),
        ((1, -1, 1, -1), "Thm6.2(1)"),
        ((1, -1, 2, -2), "Thm6.2(2)"),
        ((1, 1, -1, -1), "Thm6.2(3)"),
        ((-6, 11, -6, 1), "Thm6.2(4)"),
        ((1, 1, -3, 1), "Thm6.2(4) irrational roots"),
        ((4, 0, -3, -1), "Thm6.2(4) repeated root"),
        ((1, 0, 0, -1), "Remark 6.3"),
        ((-24, 26, -9, 1), "§6.3 Case 1"),
        ((6, 1, -4, 1), "§6.3 Case 2"),
        ((1, 0, 0, 1), "§6.3 non-rational roots"),
    ])
    def test_label(self, coefficients, label):
        assert classify(EquationSpec.of(coefficients)) == label
        assert solve(EquationSpec.of(coefficients, 1)).case_label == label

    def test_every_label_is_registered(self):
        assert "ThmB(1)" in CASES
        assert all(info.label == label for label, info in CASES.items())

    def test_degenerate(self):
        with pytest.raises(DegenerateEquationError):
            classify(EquationSpec.of([0, 0, 0]))

    @pytest.mark.parametrize("c,d,label,status", [
        (2, 1, "ThmB(1)", FamilyStatus.COMPLETE),
        (-2, 1, "ThmB(2)", FamilyStatus.COMPLETE),
        (-4, 4, "ThmB(3)", FamilyStatus.COMPLETE),
        (4, 4, "ThmB(4)", FamilyStatus.PARTIAL_KNOWN),
        (3, 2, "ThmB(5)", FamilyStatus.COMPLETE),
        (1, 1, "ThmB(6)", FamilyStatus.OPEN),
        (0, 1, "ThmB(6) c=0", FamilyStatus.COMPLETE),
        (0, 4, "ThmB(6)", FamilyStatus.OPEN),
        (1, -1, "ThmB(5) irrational roots", FamilyStatus.OPEN),
    ])
    def test_second_order_homogeneous(self, c, d, label, status):
        family = solve_second_order_homogeneous(c, d)
        assert family.case_label == label
        assert family.status == status

    def test_dilated_exponential_stays_in_open_family(self):
        family = solve_second_order_homogeneous(0, 4)
        assert family.status == FamilyStatus.OPEN
        assert _coefficients(family) == {ExpComb(Fraction(-4), "E1", dilation=2): 1}

    def test_second_order_homogeneous_without_d(self):
        family = solve_second_order_homogeneous(3, 0)
        assert family.case_label == "Thm4.1(iii)"
        assert family.argument_shift == 1


class TestStatus:
    """Complete, PartialKnown and Open families."""

    @pytest.mark.parametrize("coefficients,status", [
        ((1, 1), FamilyStatus.COMPLETE),
        ((4, -4, 1), FamilyStatus.PARTIAL_KNOWN),
        ((1, -1, 1), FamilyStatus.OPEN),
        ((4, 0, -3, -1), FamilyStatus.PARTIAL_KNOWN),
        ((1, 0, 0, -1), FamilyStatus.OPEN),
        ((1, 0, 0, 1), FamilyStatus.OPEN),
        ((-1, -1, 1), FamilyStatus.OPEN),
    ])
    def test_status(self, coefficients, status):
        family = solve(EquationSpec.of(coefficients, 1))
        assert family.status == status
        assert (family.open_note is None) == (status == FamilyStatus.COMPLETE)

    def test_unresolved_resonance_without_slot_is_open(self):
        # the rhs x climbs to Upsilon after three unit roots and has no further ladder
        family = solve(EquationSpec.of([1, -3, 3, -1], 0, 1))
        assert family.case_label == "Thm6.1(2) affine rhs"
        assert family.status == FamilyStatus.OPEN
        assert family.terms == ()

    def test_partial_known_drops_slot(self):
        family = solve(EquationSpec.of([4, -4, 1], 1))
        assert family.slots == {"E2": "exp"}
        assert "E1" in family.open_note

    def test_open_family_keeps_affine_particular(self):
        family = solve(EquationSpec.of([1, -1, 1], 2))
        assert _coefficients(family) == {ConstantTerm(): 2}


class TestClosedForms:
    """Particular solutions and free parts of individual cases."""

    def test_two_term_general(self):
        family = solve_two_term(EquationSpec.of([1, 2], 1))
        assert family.case_label == "Thm4.1(iii)"
        assert _coefficients(family) == {
            ConstantTerm(): Fraction(1, 3),
            ExpComb(Fraction(-1, 2), "E1"): 1,
        }

    def test_two_term_equal(self):
        family = solve_two_term(EquationSpec.of([2, 2], 3))
        assert _coefficients(family) == {ConstantTerm(): Fraction(3, 4), AntiPeriodicSlot("X1"): 1}

    def test_two_term_opposite(self):
        family = solve_two_term(EquationSpec.of([1, -1], 3))
        assert _coefficients(family) == {LinearTerm(): -3, PeriodicSlot("P1"): 1}

    def test_beta_zero(self):
        family = solve(EquationSpec.of([4], 2, 1))
        assert family.case_label == "Thm4.1(beta=0)"
        assert _coefficients(family) == {LinearTerm(): Fraction(1, 4), ConstantTerm(): Fraction(1, 2)}
        assert family.stages == ()

    def test_four_term_with_even_factor(self):
        family = solve_four_term(EquationSpec.of([1, -1, 1, -1], 1))
        assert family.case_label == "Thm6.2(1)"
        assert _coefficients(family) == {
            LinearTerm(): Fraction(-1, 2),
            ConstantTerm(): Fraction(1, 2),
            PeriodicSlot("P1"): Fraction(1, 2),
            AntiPeriodicSlot("X1", dilation=2): 1,
        }
        assert family.slots == {"P1": "periodic", "X1": "antiperiodic"}

    def test_cubic_reduction_case_one(self):
        family = solve(EquationSpec.of([-24, 26, -9, 1], 1))
        assert family.cubic.roots == (2, 3, 4)
        assert family.cubic.vieta_holds()
        assert not family.cubic.minus_one_is_root

    def test_cubic_reduction_case_two(self):
        family = solve(EquationSpec.of([6, 1, -4, 1], 1))
        assert family.cubic.minus_one_is_root
        assert family.cubic.to_dict()["case"] == 2

    def test_no_cubic_for_vanishing_sum(self):
        assert solve(EquationSpec.of([-6, 11, -6, 1], 1)).cubic is None

    def test_order_guards(self):
        with pytest.raises(ValueError):
            solve_three_term(EquationSpec.of([1, 1], 1))

    def test_solve_coefficients(self):
        family = solve_coefficients([1, 1], 1)
        assert family.case_label == "Thm4.1(i)"

    def test_to_dict(self):
        data = solve(EquationSpec.of([1, -1, 1, -1], 1)).to_dict()
        assert data["status"] == "Complete"
        assert data["case_label"] == "Thm6.2(1)"
        assert data["slots"] == {"P1": "periodic", "X1": "antiperiodic"}
        assert [stage["kind"] for stage in data["stages"]] == ["first_order", "even"]


class TestSoundness:
    """Instantiated families solve their equation exactly."""

    @pytest.mark.parametrize("coefficients,rhs,rhs_slope", SOUND_EQUATIONS)
    def test_default_instance(self, coefficients, rhs, rhs_slope):
        spec = EquationSpec.of(coefficients, rhs, rhs_slope)
        f = instantiate(solve(spec))
        assert residual(f, spec, default_grid(64, WINDOW, 0)) == 0

    @pytest.mark.parametrize("coefficients,rhs,rhs_slope", SOUND_EQUATIONS)
    def test_random_instances(self, coefficients, rhs, rhs_slope):
        spec = EquationSpec.of(coefficients, rhs, rhs_slope)
        family = solve(spec)
        for seed in range(5):
            f = instantiate(family, random_params(family, seed))
            assert residual(f, spec, default_grid(64, WINDOW, seed)) == 0

    @pytest.mark.parametrize("c,d", [(2, 1), (-2, 1), (-4, 4), (3, 2), (0, 1), (4, 4)])
    def test_homogeneous_instances(self, c, d):
        family = solve_second_order_homogeneous(c, d)
        for seed in range(3):
            f = instantiate(family, random_params(family, seed))
            assert residual(f, family.spec, default_grid(64, WINDOW, seed)) == 0

    def test_zero_params_give_particular(self):
        family = solve(EquationSpec.of([1, 1], 1))
        f = instantiate(family, zero_params(family))
        for x in default_grid(16, WINDOW, 3):
            assert f.value(x) == Fraction(1, 2)

    @pytest.mark.parametrize("order", [1, 2, 3])
    @pytest.mark.parametrize("affine", [False, True])
    def test_random_equations(self, order, affine):
        rng = random.Random(1000 * order + affine)
        for _ in range(200):
            coefficients = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(order + 1)]
            if not any(coefficients):
                coefficients[-1] = Fraction(1)
            rhs = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            rhs_slope = Fraction(rng.randint(-3, 3), rng.randint(1, 2)) if affine else Fraction(0)
            spec = EquationSpec.of(coefficients, rhs, rhs_slope)
            family = solve(spec)
            if family.status == FamilyStatus.OPEN:
                assert CASES[family.case_label].status == FamilyStatus.OPEN, (coefficients, family.case_label)
                continue
            f = instantiate(family, random_params(family, rng.randint(0, 10**6)))
            assert residual(f, spec, default_grid(64, WINDOW, 0)) == 0, (coefficients, rhs, rhs_slope)

    @pytest.mark.parametrize("coefficients,rhs_slope", [
        ((1, -1, 1), 0),
        ((-1, -1, 1), 0),
        ((1, 1, -3, 1), 0),
        ((1, -3, 3, -1), 1),
        ((1, 0, 0, 1), 0),
    ])
    def test_open_family_has_open_label(self, coefficients, rhs_slope):
        family = solve(EquationSpec.of(coefficients, 1, rhs_slope))
        assert family.status == FamilyStatus.OPEN
        assert CASES[family.case_label].status == FamilyStatus.OPEN


class TestInstantiate:
    """Slot validation and error paths."""

    def test_open_family(self):
        with pytest.raises(OpenFamilyError):
            instantiate(solve(EquationSpec.of([1, -1, 1], 1)))

    def test_wrong_slot_shape(self):
        family = solve(EquationSpec.of([1, 1], 1))
        params = zero_params(solve(EquationSpec.of([1, -1], 1)))
        with pytest.raises(TropDomainError):
            instantiate(family, {"X1": params["P1"]})

    def test_unknown_slot_is_ignored(self, caplog):
        family = solve(EquationSpec.of([1, 1], 1))
        with caplog.at_level(logging.WARNING):
            instantiate(family, {"Z9": ()})
        assert "Z9" in caplog.text


class TestResidual:
    """Exact residuals and the default grid."""

    def test_nonsolution(self):
        spec = EquationSpec.of([1, 1], 1)
        assert residual(const(0), spec, default_grid(8, WINDOW, 0)) == 1

    def test_empty_grid(self):
        with pytest.raises(ValueError):
            residual(const(0), EquationSpec.of([1, 1], 1), [])

    def test_default_grid_is_mixed(self):
        grid = default_grid(64, WINDOW, 0)
        assert len(grid) == 64
        assert grid == sorted(grid)
        assert grid[0] == -8 and grid[-1] == 8
        assert Fraction(1, 2) in grid
        assert any(x.denominator > 2 for x in grid)

    def test_default_grid_is_seeded(self):
        assert default_grid(64, WINDOW, 7) == default_grid(64, WINDOW, 7)
