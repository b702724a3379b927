"""Tests for Dirichlet characters and Gauss sums."""

import math
import warnings

import pytest
from sympy import totient

from besselsum.core.characters import (
    all_characters,
    character_dft,
    character_from_table,
    conductor,
    family_eval,
    gauss_sum,
    is_primitive,
    kronecker_character,
    new_family,
    principal_character,
)
from besselsum.core.errors import NotMultiplicative, NotRootOfUnity, UnsupportedModulus, WrongSupport


def test_gauss_sum_of_chi12(chi12):
    assert abs(gauss_sum(chi12) - math.sqrt(12)) < 1e-12


def test_chi12_values(chi12):
    assert [int(chi12(a).real) for a in range(12)] == [0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]
    assert is_primitive(chi12)


def test_kronecker_minus_four():
    chi = kronecker_character(-4)
    assert [int(v.real) for v in chi.values] == [0, 1, 0, -1]
    assert abs(gauss_sum(chi) - 2j) < 1e-12


@pytest.mark.parametrize("q", range(2, 13))
def test_all_characters_count_and_gauss_norm(q):
    chars = all_characters(q)
    assert len(chars) == int(totient(q))
    for chi in chars:
        if is_primitive(chi):
            assert abs(abs(gauss_sum(chi)) ** 2 - q) < 1e-10


@pytest.mark.parametrize("q", [5, 7, 8, 12])
def test_dft_of_primitive_characters(q):
    for chi in all_characters(q):
        if not is_primitive(chi):
            continue
        g = gauss_sum(chi)
        for m in range(q):
            assert abs(character_dft(chi, m) - chi(m).conjugate() * g) < 1e-10


def test_principal_characters():
    assert not is_primitive(principal_character(5))
    assert conductor(principal_character(5)) == 1
    assert is_primitive(principal_character(1))
    assert gauss_sum(principal_character(1)) == 1


def test_conjugate_is_involution():
    chi = all_characters(5)[1]
    assert chi.conjugate().conjugate().values == chi.values


@pytest.mark.parametrize("q", [5, 7, 8, 12, 15])
def test_gauss_sum_of_conjugate(q):
    for chi in all_characters(q):
        expected = chi(-1) * gauss_sum(chi).conjugate()
        assert abs(gauss_sum(chi.conjugate()) - expected) < 1e-12


def test_induced_character_mod_8_is_imprimitive():
    chi = character_from_table(8, [0, 1, 0, -1, 0, 1, 0, -1])
    assert conductor(chi) == 4
    assert not is_primitive(chi)
    assert is_primitive(kronecker_character(-4))


def test_table_validation_has_no_deprecation_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error", DeprecationWarning)
        chi = character_from_table(8, [0, 1, 0, -1, 0, 1, 0, -1])
    assert chi.modulus == 8


class TestValidation:
    def test_not_multiplicative(self):
        with pytest.raises(NotMultiplicative):
            character_from_table(5, [0, 1, 1, -1, 1])

    def test_wrong_support(self):
        with pytest.raises(WrongSupport):
            character_from_table(4, [1, 1, 0, -1])
        with pytest.raises(WrongSupport):
            character_from_table(4, [0, 1, 0, 0])

    def test_not_root_of_unity(self):
        with pytest.raises(NotRootOfUnity):
            character_from_table(5, [0, 1, 2, 1, 1])

    def test_wrong_length(self):
        with pytest.raises(WrongSupport):
            character_from_table(4, [0, 1, 0])

    def test_bad_discriminant(self):
        with pytest.raises(UnsupportedModulus):
            kronecker_character(3)

    def test_family_needs_common_modulus(self):
        with pytest.raises(UnsupportedModulus):
            new_family([kronecker_character(12), kronecker_character(-4)])

    def test_family_eval_length(self):
        with pytest.raises(ValueError):
            family_eval(new_family([kronecker_character(-4)] * 2), [1])


def test_family_eval_is_product():
    chi = kronecker_character(-4)
    family = new_family([chi, chi, chi])
    assert family_eval(family, [1, 3, 5]) == -1
    assert family_eval(family, [3, 3, 2]) == 0
