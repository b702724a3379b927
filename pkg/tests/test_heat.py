"""Tests for lattice heat kernels, convolution solutions and the RK4 oracle."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.special import ive

from besselsum.core.codes import code_from_generators
from besselsum.core.errors import NotCoprime, NotLatticePoint, OutOfWindow, StepTooLarge
from besselsum.core.heat import (
    HeatKernelQuery,
    HeatState,
    PeriodicData,
    WindowData,
    code_heat_solution,
    constant_data,
    coset_indicator,
    delta_data,
    eta_heat_probe,
    eta_heat_probe_limit,
    heat_kernel,
    heat_solve_convolution,
    heat_solve_ode_oracle,
    kernel_mass_check,
    laplacian_apply,
    oracle_check,
    plane_wave_check,
    rk4_step_count,
    semigroup_check,
    table_data,
)
from besselsum.core.lattice import identity_lattice, new_lattice
from besselsum.core.theta import eta_route_check

SKEW = new_lattice([[1, 1], [0, 1]])


def _query(lattice, y, t):
    return HeatKernelQuery(lattice, tuple(Fraction(v) for v in y), t)


class TestKernel:
    def test_at_time_zero_is_delta(self):
        assert heat_kernel(_query(identity_lattice(1), [0], 0.0)) == 1.0
        assert heat_kernel(_query(identity_lattice(1), [1], 0.0)) == 0.0

    def test_one_dimensional_value(self):
        assert heat_kernel(_query(identity_lattice(1), [3], 2.0)) == pytest.approx(ive(3, 2.0), rel=1e-14)

    def test_skew_lattice_uses_index_coordinates(self):
        # (1, 2) = 1 * (1, 1) + 1 * (0, 1)
        value = heat_kernel(_query(SKEW, [1, 2], 1.0))
        assert value == pytest.approx(ive(1, 0.5) ** 2, rel=1e-14)

    def test_not_a_lattice_point(self):
        with pytest.raises(NotLatticePoint):
            heat_kernel(_query(new_lattice([[2]]), [1], 1.0))

    @pytest.mark.parametrize("lattice", [identity_lattice(1), identity_lattice(2), SKEW])
    @pytest.mark.parametrize("t", [0.5, 5.0, 50.0])
    def test_mass_is_one(self, lattice, t):
        assert kernel_mass_check(lattice, t).passed

    @pytest.mark.parametrize("lattice", [identity_lattice(1), identity_lattice(2)])
    def test_semigroup(self, lattice):
        assert semigroup_check(lattice, 0.5, 1.0).passed


class TestLaplacian:
    def test_quadratic_has_constant_laplacian(self):
        idx = np.arange(-3, 4)
        state = HeatState(identity_lattice(1), 3, (idx ** 2).astype(float), 0.0)
        for k in range(-2, 3):
            assert laplacian_apply(state, [k]) == pytest.approx(1.0)

    def test_needs_interior_point(self):
        state = HeatState(identity_lattice(1), 2, np.zeros(5), 0.0)
        with pytest.raises(OutOfWindow):
            laplacian_apply(state, [2])

    @pytest.mark.parametrize("gamma", [[0.1], [0.1, 0.25], [0.3, 0.0, 0.45]])
    def test_plane_waves(self, gamma):
        assert plane_wave_check(gamma).passed


class TestInitialData:
    def test_periodic_coset_indicator(self, repetition_code):
        u0 = coset_indicator(repetition_code)
        pts = np.array([[0, 0, 0], [1, 1, 1], [2, 0, 0], [1, 0, 0], [3, -1, 1]])
        assert u0.evaluate(pts).tolist() == [1.0, 1.0, 1.0, 0.0, 1.0]

    def test_shifted_coset(self, repetition_code):
        u0 = coset_indicator(repetition_code, [1, 0, 0])
        assert u0.evaluate(np.array([[1, 0, 0], [0, 1, 1], [0, 0, 0]])).tolist() == [1.0, 1.0, 0.0]

    def test_constant(self):
        assert constant_data(2).evaluate(np.array([[5, -7]])).tolist() == [1.0]

    def test_window(self):
        u0 = table_data([0.0, 1.0, 2.0])
        assert u0.evaluate(np.array([[-1], [1], [2]])).tolist() == [0.0, 2.0, 0.0]

    def test_table_must_be_centred(self):
        with pytest.raises(ValueError):
            table_data([1.0, 2.0])

    def test_state_at_outside_window(self):
        state = HeatState(identity_lattice(1), 1, np.zeros(3), 0.0)
        with pytest.raises(OutOfWindow):
            state.at([2])


class TestSolutions:
    def test_indicator_of_2z(self):
        t = 1.5
        u0 = coset_indicator(code_from_generators(2, 1, []))
        state = heat_solve_convolution(identity_lattice(1), u0, t, 3)
        for x in range(-3, 4):
            assert abs(state.at([x]) - 0.5 * (1 + (-1) ** x * math.exp(-2 * t))) < 1e-9

    def test_constant_stays_constant(self):
        state = heat_solve_convolution(identity_lattice(2), constant_data(2), 2.0, 2)
        assert np.allclose(state.values, 1.0, atol=1e-9)

    def test_delta_is_the_kernel(self):
        state = heat_solve_convolution(SKEW, delta_data(2), 1.0, 2)
        assert state.at([1, 1]) == pytest.approx(heat_kernel(_query(SKEW, [1, 2], 1.0)), abs=1e-15)

    def test_oracle_on_z(self):
        assert oracle_check(identity_lattice(1), delta_data(1), 5.0, 40).passed

    def test_oracle_on_skew_lattice(self):
        assert oracle_check(SKEW, delta_data(2), 2.0, 20).passed

    def test_oracle_on_periodic_data(self, repetition_code):
        u0 = coset_indicator(repetition_code)
        assert oracle_check(identity_lattice(3), u0, 1.5, 2, step=0.02).passed

    def test_oracle_on_z4_code(self):
        u0 = coset_indicator(code_from_generators(4, 1, [[2]]))
        assert oracle_check(identity_lattice(1), u0, 1.5, 4, step=0.02).passed

    def test_step_too_large(self):
        with pytest.raises(StepTooLarge):
            heat_solve_ode_oracle(identity_lattice(1), delta_data(1), 1.0, 5, step=1.5)

    @pytest.mark.parametrize("t,step,per_unit,expected", [
        (1.0, None, 10, 10), (1.05, None, 10, 11), (2.0, None, 25, 50), (1.0, 0.25, 3, 4), (0.0, None, 10, 0),
    ])
    def test_rk4_step_count(self, t, step, per_unit, expected):
        assert rk4_step_count(t, step, per_unit) == expected

    def test_steps_per_unit_reaches_the_oracle(self):
        report = oracle_check(identity_lattice(1), delta_data(1), 1.0, 20, steps_per_unit=40)
        assert report.extras["rk4_steps"] == 40
        assert report.passed

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            heat_solve_convolution(identity_lattice(2), delta_data(1), 1.0, 2)


class TestCodeHeat:
    @pytest.mark.parametrize("x", [[0, 0, 0], [1, 0, 0]])
    def test_repetition_code(self, repetition_code, x):
        report = code_heat_solution(repetition_code, x, 1.5)
        assert report.passed
        assert ("weight_enumerator" in report.extras) == (x == [0, 0, 0])

    @pytest.mark.parametrize("x", range(-2, 3))
    def test_closed_form(self, x):
        report = code_heat_solution(code_from_generators(2, 1, []), [x], 1.5)
        assert abs(report.lhs - 0.5 * (1 + (-1) ** x * math.exp(-3.0))) < 1e-12

    def test_agrees_with_oracle(self, repetition_code):
        report = code_heat_solution(repetition_code, [0, 0, 0], 1.5)
        oracle = heat_solve_ode_oracle(identity_lattice(3), coset_indicator(repetition_code), 1.5, 0, step=0.02)
        assert abs(report.lhs - oracle.at([0, 0, 0])) < 1e-6


class TestEtaProbe:
    def test_dual_side_matches(self):
        report = eta_heat_probe(5, 0.2)
        assert report.extras["dual_residual"] < 1e-10

    def test_approaches_limit(self):
        near = eta_heat_probe(5, 0.2).extras["limit_residual"]
        far = eta_heat_probe(25, 0.2).extras["limit_residual"]
        assert far < near

    def test_limit_target(self):
        assert eta_route_check(1j * math.pi).passed
        assert eta_heat_probe_limit(1.0) == pytest.approx(eta_route_check(1j * math.pi).rhs / math.sqrt(3.0))

    def test_needs_coprime_l(self):
        with pytest.raises(NotCoprime):
            eta_heat_probe(6, 0.2)
