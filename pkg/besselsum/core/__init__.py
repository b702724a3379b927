#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Numerical core: lattices, characters, Bessel sums, theta and eta, codes, heat.
"""

from __future__ import annotations

# Re-export errors and reports (LAYER 0)
from besselsum.core.errors import BesselSumError, SpecParseError
from besselsum.core.reports import (
    CheckReport,
    ErrorReport,
    IdentityReport,
    RunReport,
    ValueReport,
)

# Re-export building blocks (LAYER 1)
from besselsum.core.special_functions import BesselEvalConfig, a_function, bessel_i_int, bessel_i_scaled
from besselsum.core.lattice import Lattice, dual_lattice, identity_lattice, new_lattice
from besselsum.core.characters import (
    DirichletCharacter,
    DirichletCharacterFamily,
    gauss_sum,
    kronecker_character,
    new_family,
    principal_character,
)

# Re-export identities (LAYER 2)
from besselsum.core.lattice_sums import lhs_bessel_sum, rhs_dual_sum, verify_identity
from besselsum.core.theta import continuum_limit_probe, dedekind_eta, eta, theta_char_sides
from besselsum.core.codes import LinearCode, code_from_generators, coset_cwe, dual_code, verify_macwilliams_bessel
from besselsum.core.heat import HeatKernelQuery, eta_heat_probe, heat_kernel, heat_solve_convolution

__all__ = [
    # Errors and reports
    "BesselSumError",
    "SpecParseError",
    "CheckReport",
    "ErrorReport",
    "IdentityReport",
    "RunReport",
    "ValueReport",
    # Building blocks
    "BesselEvalConfig",
    "a_function",
    "bessel_i_int",
    "bessel_i_scaled",
    "Lattice",
    "dual_lattice",
    "identity_lattice",
    "new_lattice",
    "DirichletCharacter",
    "DirichletCharacterFamily",
    "gauss_sum",
    "kronecker_character",
    "new_family",
    "principal_character",
    # Identities
    "lhs_bessel_sum",
    "rhs_dual_sum",
    "verify_identity",
    "continuum_limit_probe",
    "dedekind_eta",
    "eta",
    "theta_char_sides",
    "LinearCode",
    "code_from_generators",
    "coset_cwe",
    "dual_code",
    "verify_macwilliams_bessel",
    "HeatKernelQuery",
    "eta_heat_probe",
    "heat_kernel",
    "heat_solve_convolution",
]
