"""
Special functions: exact values and the difference identities they satisfy.
"""

from fractions import Fraction

import pytest

from tropcalc.config import Config
from tropcalc.errors import BracketContinuityError, SeamError, TropDomainError
from tropcalc.special import (
    AntiPeriodicProfile,
    PeriodicProfile,
    Psi,
    Upsilon,
    antiperiodic_from_profile,
    bracket,
    exp_combination,
    omega_special,
    periodic_from_profile,
    phi,
    pi_a,
    psi_period,
    sawtooth,
    theta,
    trop_exp,
    xi_triangle,
)


class TestPsiAndUpsilon:
    """Psi(x) - Psi(x-1) = x and Upsilon(x+1) - Upsilon(x) = Psi(x)."""

    @pytest.mark.parametrize("x,expected", [
        (-3, 3), (-2, 1), (-1, 0), (0, 0), (1, 1), (2, 3), (3, 6),
    ])
    def test_psi_values(self, x, expected):
        assert Psi().value(x) == expected

    def test_psi_difference(self, mixed_points):
        f = Psi()
        for x in mixed_points:
            assert f.value(x) - f.value(x - 1) == x

    def test_upsilon_difference(self, mixed_points):
        for x in mixed_points:
            assert Upsilon().value(x + 1) - Upsilon().value(x) == Psi().value(x)

    def test_psi_period(self, mixed_points):
        for q in (Fraction(2), Fraction(3, 2)):
            f = psi_period(q)
            for x in mixed_points:
                assert f.value(x) - f.value(x - q) == x

    def test_psi_is_entire(self):
        assert all(e.is_root for e in Psi().events_in(-10, 10))


class TestSawtooth:
    """The tent wave pi^(a,b)."""

    def test_values(self):
        f = sawtooth(1, 1)
        assert f.value(Fraction(1, 2)) == Fraction(1, 4)
        assert f.value(3) == 0
        assert f.value(Fraction(-1, 4)) == Fraction(1, 8)

    def test_periodic(self, mixed_points):
        f = sawtooth(2, 3)
        for x in mixed_points:
            assert f.value(x + 1) == f.value(x)

    def test_matches_profile(self, mixed_points):
        f = sawtooth(2, 3)
        g = periodic_from_profile(PeriodicProfile.sawtooth(2, 3))
        for x in mixed_points:
            assert f(x) == g(x)

    def test_needs_positive_parameters(self):
        with pytest.raises(TropDomainError):
            sawtooth(0, 1)


class TestTropExp:
    """e_c(x+1) = c e_c(x), continuous, breakpoints on the integers."""

    @pytest.mark.parametrize("base", [Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(-1, 3)])
    def test_shift_identity(self, base, mixed_points):
        e = trop_exp(base)
        for x in mixed_points:
            assert e.value(x + 1) == base * e.value(x)

    @pytest.mark.parametrize("base", [Fraction(2), Fraction(-3), Fraction(1, 2)])
    def test_continuous_at_integers(self, base):
        e = trop_exp(base)
        for k in range(-4, 5):
            left = e.value(k - Fraction(1, 10**6))
            assert abs(left - e.value(k)) < Fraction(1, 10**3)

    def test_values(self):
        e = trop_exp(2)
        assert e.value(0) == 1
        assert e.value(3) == 8
        assert e.value(-3) == Fraction(1, 8)

    def test_negative_base_vanishes_on_lattice(self):
        e = trop_exp(-2)
        x0 = e.root_offset
        assert x0 == Fraction(1, 3)
        for k in range(-5, 6):
            assert e.value(x0 + k) == 0

    @pytest.mark.parametrize("base", [-1, 0, 1])
    def test_invalid_bases(self, base):
        with pytest.raises(TropDomainError):
            trop_exp(base)

    def test_exp_combination_shift_identity(self, mixed_points):
        f = exp_combination(3, [(2, 0), (-1, Fraction(1, 2))])
        for x in mixed_points:
            assert f.value(x + 1) == 3 * f.value(x)

    def test_exp_combination_dilation(self, mixed_points):
        f = exp_combination(-2, [(1, Fraction(1, 3))], dilation=2)
        for x in mixed_points:
            assert f.value(x + 2) == -2 * f.value(x)

    def test_exp_combination_rejects_shift_outside_unit_interval(self):
        with pytest.raises(TropDomainError):
            exp_combination(2, [(1, 1)])


class TestLadderFunctions:
    """Phi, Theta and Omega raise a periodic function one step at a time."""

    def test_values_on_tent(self, tent_profile):
        assert phi(tent_profile).value(Fraction(5, 2)) == Fraction(1, 2)
        assert theta(tent_profile).value(Fraction(5, 2)) == Fraction(1, 2)
        assert omega_special(tent_profile).value(Fraction(7, 2)) == Fraction(3, 4)

    def test_phi_difference(self, tent_profile, mixed_points):
        f, p = phi(tent_profile), periodic_from_profile(tent_profile)
        for x in mixed_points:
            assert f.value(x + 1) - f.value(x) == p.value(x) - tent_profile.anchor

    def test_theta_difference(self, tent_profile, mixed_points):
        t, f = theta(tent_profile), phi(tent_profile)
        for x in mixed_points:
            assert t.value(x + 1) - t.value(x) == f.value(x)

    def test_omega_difference(self, tent_profile, mixed_points):
        o, t = omega_special(tent_profile), theta(tent_profile)
        for x in mixed_points:
            assert o.value(x + 1) - o.value(x) == t.value(x)

    def test_phi_with_nonzero_anchor(self, mixed_points):
        profile = PeriodicProfile(((0, 2), (Fraction(1, 3), 5)))
        f, p = phi(profile), periodic_from_profile(profile)
        for x in mixed_points:
            assert f.value(x + 1) - f.value(x) == p.value(x) - 2


class TestProfiles:
    """Profiles must close continuously."""

    def test_periodic_seam_mismatch(self):
        with pytest.raises(SeamError):
            PeriodicProfile(((0, 0), (Fraction(1, 2), 1)), end_value=1)

    def test_periodic_seam_ok(self):
        profile = PeriodicProfile(((0, 0), (Fraction(1, 2), 1)), end_value=0)
        assert profile.value_at(Fraction(3, 4)) == Fraction(1, 2)

    def test_antiperiodic_seam_mismatch(self):
        with pytest.raises(SeamError):
            AntiPeriodicProfile(((0, 1),), end_value=1)

    def test_profile_must_start_at_zero(self):
        with pytest.raises(TropDomainError):
            PeriodicProfile(((Fraction(1, 2), 0),))

    def test_antiperiodic_extension(self, mixed_points):
        xi = antiperiodic_from_profile(AntiPeriodicProfile(((0, 1), (Fraction(1, 4), 3))))
        for x in mixed_points:
            assert xi.value(x + 1) == -xi.value(x)

    def test_antiperiodic_first_zero(self):
        assert AntiPeriodicProfile(((0, 1),)).x0 == Fraction(1, 2)
        assert AntiPeriodicProfile.triangle().x0 == 0


class TestBracket:
    """[x - x0] g(x) for g vanishing on x0 + Z."""

    def test_antiperiodic_bracket(self, mixed_points):
        xi = xi_triangle()
        b = bracket(xi, 0)
        for x in mixed_points:
            assert b.value(x + 1) == -b.value(x) - xi.value(x)

    def test_exp_bracket(self, mixed_points):
        e = trop_exp(-2)
        b = bracket(e, e.root_offset)
        for x in mixed_points:
            assert b.value(x + 1) == -2 * b.value(x) - 2 * e.value(x)

    def test_rejects_non_vanishing_factor(self):
        with pytest.raises(BracketContinuityError) as excinfo:
            bracket(trop_exp(2), 0)
        assert excinfo.value.value != 0

    def test_validation_window_from_config(self):
        Config.set_bracket_window(Fraction(-2), Fraction(2))
        b = bracket(xi_triangle(), 0)
        assert b.window == (Fraction(-2), Fraction(2))


class TestPiA:
    """pi_a: a 1-periodic valley of depth a(1-a) at a + Z."""

    def test_values(self):
        f = pi_a(Fraction(1, 2))
        assert f.value(0) == 0
        assert f.value(Fraction(1, 2)) == Fraction(-1, 4)
        assert f.value(Fraction(7, 4)) == Fraction(-1, 8)

    def test_poles_on_integers(self):
        events = pi_a(Fraction(1, 3)).events_in(-2, 2)
        poles = [e.location for e in events if e.is_pole]
        assert poles == [-1, 0, 1]

    def test_a_out_of_range(self):
        with pytest.raises(TropDomainError):
            pi_a(1)
