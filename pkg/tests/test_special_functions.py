"""Tests for I-Bessel evaluation, A_y and the Bessel tail bounds."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import ive, iv

from besselsum.core.errors import TermBudgetExceeded
from besselsum.core.special_functions import (
    BesselEvalConfig,
    a_function,
    bessel_i_int,
    bessel_i_scaled,
    bessel_i_table,
    bessel_i_tilde,
    bessel_tail_bound,
    tail_radius,
)


def _exact_i1_at_2(terms=50):
    # I_1(2) = sum_k 1 / (k! (k+1)!)
    total = Fraction(0)
    for k in range(terms):
        total += Fraction(1, math.factorial(k) * math.factorial(k + 1))
    return float(total)


class TestBesselInt:
    def test_matches_rational_series(self):
        assert abs(bessel_i_int(1, 2.0) - _exact_i1_at_2()) < 1e-13

    def test_negative_order_is_symmetric(self):
        assert bessel_i_int(-3, 1.7) == bessel_i_int(3, 1.7)

    def test_at_zero(self):
        assert bessel_i_int(0, 0.0) == 1.0
        assert bessel_i_int(2, 0.0) == 0.0

    def test_negative_argument_parity(self):
        assert abs(bessel_i_int(3, -1.2) + bessel_i_int(3, 1.2)) < 1e-14
        assert abs(bessel_i_int(2, -1.2) - bessel_i_int(2, 1.2)) < 1e-14

    def test_complex_argument_against_scipy(self):
        for t in (1 + 1j, 0.5 - 2j, 3j):
            assert abs(bessel_i_int(2, t) - iv(2, t)) < 1e-10

    def test_table_matches_pointwise(self):
        table = bessel_i_table(6, 1.3)
        for v in range(7):
            assert abs(table[v] - bessel_i_int(v, 1.3)) < 1e-14

    def test_term_budget(self):
        with pytest.raises(TermBudgetExceeded):
            bessel_i_int(0, 200.0, BesselEvalConfig(max_series_terms=5))


class TestScaled:
    def test_cross_route(self):
        assert abs(bessel_i_scaled(5, 20.0) - math.exp(-20.0) * bessel_i_int(5, 20.0).real) < 1e-12

    def test_large_argument_stays_finite(self):
        value = bessel_i_scaled(5, 100.0)
        assert math.isfinite(value)
        assert value == pytest.approx(ive(5, 100.0), rel=1e-14)

    def test_vectorised(self):
        out = bessel_i_scaled(np.arange(-3, 4), 2.0)
        assert out.shape == (7,)
        assert out[0] == out[6]

    def test_rejects_negative_t(self):
        with pytest.raises(ValueError):
            bessel_i_scaled(1, -1.0)


class TestTilde:
    def test_integer_order_agrees(self):
        assert abs(bessel_i_tilde(3, 1.5) - bessel_i_int(3, 1.5)) < 1e-10

    def test_half_integer_order_by_quadrature(self):
        expected, _ = quad(lambda s: math.exp(0.8 * math.cos(s)) * math.cos(0.5 * s), 0, math.pi)
        assert abs(bessel_i_tilde(0.5, 0.8) - expected / math.pi) < 1e-10


class TestAFunction:
    def test_closed_forms_mod_two(self):
        t = 0.7
        assert abs(a_function(0, t, 2) - math.cosh(t)) < 1e-14
        assert abs(a_function(1, t, 2) - math.sinh(t)) < 1e-14

    def test_modulus_one_is_exponential(self):
        assert abs(a_function(0, 1.1, 1) - math.exp(1.1)) < 1e-13

    @pytest.mark.parametrize("y", [0, 1, 2])
    def test_direct_residue_sum(self, y):
        t = 1.3
        direct = sum(bessel_i_int(g, t) for g in range(-30, 31) if (g - y) % 3 == 0)
        assert abs(a_function(y, t, 3) - direct) < 1e-10

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            a_function(0, 1.0, 0)


class TestTailBounds:
    def test_bound_dominates_actual_tail(self):
        s, radius = 2.0, 5
        actual = 2 * sum(ive(v, s) for v in range(radius + 1, 200))
        assert actual <= bessel_tail_bound(radius, s)

    def test_bound_decreases(self):
        values = [bessel_tail_bound(r, 3.0) for r in (5, 10, 20, 40)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_tail_radius_is_minimal(self):
        r = tail_radius(4.0, 1e-12)
        assert bessel_tail_bound(r, 4.0) <= 1e-12
        assert bessel_tail_bound(r - 1, 4.0) > 1e-12

    def test_zero_time(self):
        assert tail_radius(0.0, 1e-12) == 0
        assert bessel_tail_bound(3, 0.0) == 0.0


COMPLEX_TIMES = [3 + 4j, -20 + 30j, 50j, 35 - 35j]


class TestInvariants:
    @pytest.mark.parametrize("m", [1, 2, 5, 7])
    @pytest.mark.parametrize("t", [0.3, 2.5, -1.7 + 2j])
    def test_a_function_residues_sum_to_exponential(self, m, t):
        total = sum(a_function(y, t, m) for y in range(m))
        assert abs(total - cmath.exp(t)) <= 1e-12 * abs(cmath.exp(t))

    @pytest.mark.parametrize("x", [1, 2, 5, 12])
    @pytest.mark.parametrize("t", [0.4, 3.0, 1 + 2j, -2.5 + 0.5j])
    def test_three_term_recurrence(self, x, t):
        lhs = bessel_i_int(x - 1, t) - bessel_i_int(x + 1, t)
        rhs = 2 * x / t * bessel_i_int(x, t)
        assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(rhs))

    @pytest.mark.parametrize("x", [0, 1, 3, 10, 50, 300])
    @pytest.mark.parametrize("t", [0.1, 1.0, 5.0, 30.0, 200.0])
    def test_scaled_value_bound(self, x, t):
        assert math.sqrt(t) * bessel_i_scaled(x, t) <= (1 + abs(x) / t) ** (-abs(x) / 2)

    @pytest.mark.parametrize("x", [0, 3, 17])
    @pytest.mark.parametrize("t", COMPLEX_TIMES)
    def test_integer_and_integral_forms_against_scipy(self, x, t):
        scale = math.exp(abs(t.real))
        expected = iv(x, t)
        assert abs(bessel_i_int(x, t) - expected) <= 1e-10 * scale
        assert abs(bessel_i_tilde(x, t) - expected) <= 1e-10 * scale
