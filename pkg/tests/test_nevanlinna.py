"""
Proximity, counting and characteristic functions, and order estimates.
"""

from fractions import Fraction

import pytest

from tropcalc.core import const, finite_pl, shift
from tropcalc.nevanlinna import (
    characteristic,
    counting,
    nevanlinna_report,
    order_estimate,
    proximity,
)
from tropcalc.nevanlinna.functionals import BOUNDED, HYPER_NOT_MEANINGFUL
from tropcalc.special import Psi, pi_a, sawtooth, trop_exp


class TestExactValues:
    """Functionals evaluated by hand."""

    def test_counting_tent_wave(self):
        # poles at +-1/2 and +-3/2, multiplicity 1
        assert counting(sawtooth(1, 1), 2) == 2

    def test_characteristic_exp(self):
        assert proximity(trop_exp(2), 3) == Fraction(65, 16)
        assert characteristic(trop_exp(2), 3) == Fraction(65, 16)

    def test_counting_double_pole(self):
        f = finite_pl([(0, 0)], left_tail_slope=1, right_tail_slope=-1)
        assert counting(f, 3) == 3
        assert proximity(f, 3) == 0

    def test_psi(self):
        # Psi(r) + Psi(-r) = r^2 at integers
        assert characteristic(Psi(), 4) == 8
        assert counting(Psi(), 4) == 0

    def test_constant(self):
        assert characteristic(const(-5), 10) == 0
        assert characteristic(const(3), 10) == 3

    def test_pole_on_radius_does_not_count(self):
        # pole of the tent at 1/2 sits exactly on r
        assert counting(sawtooth(1, 1), Fraction(1, 2)) == 0

    def test_radius_must_be_positive(self):
        with pytest.raises(ValueError):
            counting(Psi(), 0)


class TestOrderEstimates:
    """Regression of log T against log r on radii 2^3 .. 2^13."""

    def test_psi_has_order_two(self):
        order, _ = order_estimate(Psi())
        assert order == pytest.approx(2.0, abs=0.05)

    def test_pi_a_has_order_two(self):
        order, _ = order_estimate(pi_a(Fraction(1, 2)))
        assert order == pytest.approx(2.0, abs=0.05)

    def test_exp_has_hyper_order_one(self):
        _, hyper = order_estimate(trop_exp(2))
        assert hyper == pytest.approx(1.0, abs=0.05)

    @pytest.mark.parametrize("c", [-4, Fraction(3, 2), 4])
    def test_order_is_shift_invariant(self, c):
        order, _ = order_estimate(shift(Psi(), c))
        assert order == pytest.approx(2.0, abs=0.05)

    def test_bounded_function(self):
        report = nevanlinna_report(const(-1))
        assert report.order_estimate == 0.0
        assert report.hyper_order_estimate is None
        assert BOUNDED in report.flags
        assert HYPER_NOT_MEANINGFUL in report.flags

    def test_report_columns(self):
        radii = [Fraction(2) ** k for k in range(1, 9)]
        report = nevanlinna_report(Psi(), radii)
        assert report.radii == tuple(radii)
        assert report.t_values == tuple(m + n for m, n in zip(report.m_values, report.n_values))
        assert report.fit_window == (radii[4], radii[-1])

    def test_too_few_radii(self):
        with pytest.raises(ValueError):
            nevanlinna_report(Psi(), [1, 2, 3])

    def test_radii_must_increase(self):
        with pytest.raises(ValueError):
            nevanlinna_report(Psi(), [8, 7, 6, 5, 4, 3, 2, 1])
