"""Tests for theta transformations, the continuum limit, eta and the Jacobi identity."""

import math
from fractions import Fraction

import pytest
from scipy.special import gamma

from besselsum.core.characters import kronecker_character, new_family
from besselsum.core.lattice import identity_lattice, new_lattice
from besselsum.core.lattice_sums import trivial_family
from besselsum.core.theta import (
    ContinuumLimitSchedule,
    character_theta_check,
    continuum_limit_probe,
    dedekind_eta,
    eta,
    eta_periodicity_check,
    eta_route_check,
    eta_transformation_check,
    gaussian_grid_tail,
    is_strictly_decreasing,
    jacobi_discrete_check,
    jacobi_imaginary_check,
    jacobi_theta_identity_check,
    principal_sqrt,
    theta_char_sides,
    theta_lattice,
)


class TestThetaSides:
    def test_trivial_character_on_z(self):
        assert theta_char_sides(identity_lattice(1), trivial_family(1), [0], [0], [0.5]).passed

    def test_chi12_on_12z(self, chi12):
        report = theta_char_sides(new_lattice([[12]]), new_family([chi12]), [0], [0], [0.5])
        assert report.passed
        assert report.abs_residual < 1e-11

    def test_non_diagonal_with_phase(self):
        lattice = new_lattice([[2, 1], [0, 3]])
        report = theta_char_sides(lattice, trivial_family(2), [1, 0], [Fraction(1, 3), 0], [0.4, 0.9])
        assert report.passed

    def test_needs_positive_time(self):
        with pytest.raises(ValueError):
            theta_char_sides(identity_lattice(1), trivial_family(1), [0], [0], [0.0])

    def test_one_dimensional_character_form(self, chi12):
        assert character_theta_check(chi12, 6, 1.0, 1, 0.5).passed
        assert character_theta_check(chi12, 12, 0.7, 0, 0.3).passed
        assert character_theta_check(kronecker_character(-3), Fraction(3, 2), 1.0, 1, 0.4).passed

    def test_character_form_rejects_bad_ell(self, chi12):
        with pytest.raises(ValueError):
            character_theta_check(chi12, 5, 1.0, 0, 0.5)


def test_lattice_theta_of_z():
    # Theta_Z(t) = sum exp(-4 pi^2 k^2 t); at t = 1 only k = 0 matters to 1e-17
    value = theta_lattice(identity_lattice(1), 1.0)
    assert abs(value.value - (1 + 2 * math.exp(-4 * math.pi ** 2))) < 1e-15


def test_gaussian_tail_dominates():
    a, radius = 0.3, 4.0
    actual = sum(math.exp(-a * u * u) for u in range(-200, 201) if abs(u) > radius)
    assert actual <= gaussian_grid_tail(a, radius)


class TestContinuumLimit:
    def test_residuals_decrease_on_z(self):
        schedule = ContinuumLimitSchedule([8, 16, 32], identity_lattice(1), trivial_family(1), [0], [0], [0.5])
        rows = continuum_limit_probe(schedule)
        assert is_strictly_decreasing([r.limit_residual for r in rows])
        assert all(r.identity_residual < 1e-9 for r in rows)

    def test_residuals_decrease_with_character(self, chi12):
        schedule = ContinuumLimitSchedule([8, 16, 32], new_lattice([[12]]), new_family([chi12]), [0], [0], [0.5])
        rows = continuum_limit_probe(schedule)
        assert is_strictly_decreasing([r.limit_residual for r in rows])

    def test_schedule_validation(self):
        with pytest.raises(ValueError):
            ContinuumLimitSchedule([16, 8], identity_lattice(1), trivial_family(1), [0], [0], [0.5])
        with pytest.raises(ValueError):
            ContinuumLimitSchedule([8], identity_lattice(1), trivial_family(1), [0], [0], [-1.0])

    def test_anisotropic_scales(self):
        schedule = ContinuumLimitSchedule([4], identity_lattice(2), trivial_family(2), [0, 0], [0, 0],
                                          [0.5, 0.5], alphas=[1.0, 1.5])
        assert schedule.scales(4) == [4, 6]


class TestEta:
    def test_value_at_i(self):
        expected = gamma(0.25) / (2 * math.pi ** 0.75)
        assert abs(eta(1j) - expected) < 1e-12

    @pytest.mark.parametrize("tau", [1j, 0.5 + 2j, 0.3 + 1.7j])
    def test_routes_agree(self, tau):
        assert eta_route_check(tau).passed

    @pytest.mark.parametrize("tau", [1j, 0.3 + 1.7j])
    def test_modular_transformation(self, tau):
        assert eta_transformation_check(tau).passed

    def test_periodicity(self):
        assert eta_periodicity_check(0.3 + 1.7j).passed

    def test_needs_upper_half_plane(self):
        with pytest.raises(ValueError):
            dedekind_eta(-1j)


class TestJacobi:
    @pytest.mark.parametrize("t", [0.1, 0.25, 1.0, 5.0])
    def test_identity(self, t):
        report = jacobi_theta_identity_check(t)
        assert report.passed
        assert report.extras["theta_residual"] < 1e-12

    def test_residual_at_quarter(self):
        assert jacobi_theta_identity_check(0.25).abs_residual < 1e-13

    def test_imaginary_transformation(self):
        assert jacobi_imaginary_check(0.1, 1.2j).passed

    def test_discrete_precursor(self):
        for L in (1, 4, 16):
            assert jacobi_discrete_check(L, 0.25).passed

    def test_discrete_precursor_approaches_limit(self):
        target = jacobi_theta_identity_check(0.25).lhs
        gaps = [abs(jacobi_discrete_check(L, 0.25).lhs - target) for L in (2, 8, 32)]
        assert is_strictly_decreasing(gaps)


def test_principal_sqrt_branch():
    assert principal_sqrt(-4) == 2j
    assert abs(principal_sqrt(1j) - complex(math.sqrt(0.5), math.sqrt(0.5))) < 1e-15
