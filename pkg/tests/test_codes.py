"""Tests for linear codes, weight enumerators and the Bessel MacWilliams identities."""

import math

import numpy as np
import pytest

from besselsum.core.codes import (
    binary_macwilliams_exact,
    check_preimage_duality,
    code_from_generators,
    coset_cwe,
    cwe,
    dual_code,
    hamming_we,
    kernel_generators,
    parity_check_code,
    preimage_lattice,
    verify_cwe_bessel,
    verify_macwilliams_bessel,
    verify_wood_identity,
)
from besselsum.core.errors import EnumerationTooLarge
from besselsum.core.lattice import contains


class TestCodes:
    def test_repetition_and_dual(self, repetition_code):
        dual = dual_code(repetition_code)
        assert repetition_code.size == 2
        assert dual.size == 4
        assert repetition_code.size * dual.size == 2 ** 3
        assert dual_code(dual).words == repetition_code.words

    def test_parity_check_gives_even_weight_code(self, repetition_code):
        even = parity_check_code(2, [[1, 1, 1]])
        assert even.words == dual_code(repetition_code).words
        assert all(sum(w) % 2 == 0 for w in even.words)

    def test_zero_code(self):
        code = code_from_generators(2, 1, [])
        assert code.words == ((0,),)
        assert dual_code(code).size == 2

    def test_code_over_z4(self):
        code = code_from_generators(4, 1, [[2]])
        assert code.words == ((0,), (2,))
        assert dual_code(code).words == ((0,), (2,))

    def test_kernel_generators_span_the_kernel(self):
        gens = kernel_generators(4, 2, [[1, 1]])
        span = code_from_generators(4, 2, gens)
        assert span.words == parity_check_code(4, [[1, 1]]).words
        assert span.size == 4

    def test_membership_and_cosets(self, repetition_code):
        assert [1, 1, 1] in repetition_code
        assert [3, 1, -1] in repetition_code
        assert [1, 0, 0] not in repetition_code
        assert sorted(map(tuple, repetition_code.coset([1, 0, 0]).tolist())) == [(0, 1, 1), (1, 0, 0)]

    def test_enumeration_cap(self):
        gens = [[1 if i == j else 0 for j in range(20)] for i in range(20)]
        with pytest.raises(EnumerationTooLarge):
            code_from_generators(2, 20, gens, cap=1000)

    def test_bad_generators(self):
        with pytest.raises(ValueError):
            code_from_generators(2, 3, [[1, 2, 0]])
        with pytest.raises(ValueError):
            code_from_generators(2, 3, [[1, 1]])


class TestPreimage:
    def test_covolume(self, repetition_code):
        lat = preimage_lattice(repetition_code)
        assert lat.covolume == 4
        assert contains(lat, [1, 1, 1])
        assert contains(lat, [2, 0, 0])
        assert not contains(lat, [1, 0, 0])

    def test_duality(self, repetition_code):
        assert check_preimage_duality(repetition_code)
        assert check_preimage_duality(code_from_generators(3, 2, [[1, 2]]))


class TestEnumerators:
    def test_cwe_of_repetition(self, repetition_code):
        assert cwe(repetition_code).coefficients == {(3, 0): 1, (0, 3): 1}

    def test_hamming_of_even_weight(self, repetition_code):
        even = dual_code(repetition_code)
        assert hamming_we(even).coefficients == {(3, 0): 1, (1, 2): 3}

    def test_coset_enumerator(self, repetition_code):
        poly = coset_cwe(repetition_code, [1, 0, 0])
        assert poly.coefficients == {(2, 1): 1, (1, 2): 1}
        assert poly.is_homogeneous()
        assert poly.total() == 2

    def test_evaluate(self, repetition_code):
        assert cwe(repetition_code).evaluate([2, 3]) == 8 + 27

    def test_exact_binary_macwilliams(self, repetition_code):
        assert binary_macwilliams_exact(repetition_code)
        assert binary_macwilliams_exact(code_from_generators(2, 4, [[1, 1, 0, 0], [0, 1, 1, 1]]))


class TestBesselIdentities:
    @pytest.mark.parametrize("x", [[0, 0, 0], [1, 0, 0]])
    def test_cwe_bessel(self, repetition_code, x):
        assert verify_cwe_bessel(repetition_code, x, 0.7).passed

    def test_cwe_bessel_general_time(self, repetition_code):
        assert verify_cwe_bessel(repetition_code, [1, 0, 0], [0.4, 0.9, 1.3]).passed

    def test_zero_code_is_cosh(self):
        report = verify_cwe_bessel(code_from_generators(2, 1, []), [0], 0.7)
        assert abs(report.lhs - math.cosh(0.7)) < 1e-9

    @pytest.mark.parametrize("x", [[0, 0, 0], [1, 0, 0], [1, 1, 1]])
    def test_macwilliams_bessel(self, repetition_code, x):
        report = verify_macwilliams_bessel(repetition_code, x, 0.7)
        assert report.passed
        if len(set(x)) == 1:
            assert report.extras["diagonal_residual"] < 1e-9

    @pytest.mark.parametrize("x0", [0, 1])
    def test_binary_closed_form(self, repetition_code, x0):
        t = 0.7
        report = verify_macwilliams_bessel(repetition_code, [x0] * 3, t)
        rhs = 2 * hamming_we(dual_code(repetition_code)).evaluate([math.exp(t), (-1) ** x0 * math.exp(-t)])
        assert abs(report.lhs - rhs) < 1e-9

    def test_classical_form_for_repetition(self):
        t = 0.7
        X, Y = math.exp(t), math.exp(-t)
        assert abs(0.5 * ((X + Y) ** 3 + (X - Y) ** 3) - (X ** 3 + 3 * X * Y ** 2)) < 1e-12

    def test_ternary_code(self):
        code = code_from_generators(3, 4, [[1, 2, 0, 1], [0, 1, 1, 2]])
        for x in ([0, 0, 0, 0], [1, 0, 2, 0]):
            assert verify_cwe_bessel(code, x, 0.7).passed
            assert verify_macwilliams_bessel(code, x, 0.7).passed

    def test_z4_code(self):
        code = code_from_generators(4, 1, [[2]])
        for x in ([0], [1]):
            assert verify_macwilliams_bessel(code, x, 1 + 0.5j).passed

    def test_wood_identity(self):
        code = code_from_generators(3, 3, [[1, 1, 1]])
        values = np.exp(0.3j * np.arange(3)) * (1.0 + 0.1 * np.arange(3))
        for x0 in (0, 1, 2):
            assert verify_wood_identity(code, x0, values).passed
