#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exception hierarchy for besselsum.

Every error names the invariant or input field that was violated so the CLI
can report it precisely.
"""

from __future__ import annotations
from typing import Optional


class BesselSumError(Exception):
    """Base class for all besselsum errors."""

    def __init__(self, message: str, field: Optional[str] = None) -> None:
        super().__init__(message)
        self.field = field

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.field}: {msg}" if self.field else msg


# special functions
class TermBudgetExceeded(BesselSumError):
    """Series tail bound did not drop below tolerance within the term budget."""


class QuadratureNotConverged(BesselSumError):
    """Successive quadrature doublings kept disagreeing."""


# lattices
class SingularBasis(BesselSumError):
    """Basis matrix has zero determinant."""


class NotIntegral(BesselSumError):
    """Operation needs an integral basis."""


# characters
class NotMultiplicative(BesselSumError):
    pass


class WrongSupport(BesselSumError):
    pass


class NotRootOfUnity(BesselSumError):
    pass


class UnsupportedModulus(BesselSumError):
    pass


class NotPrimitive(BesselSumError):
    """Identity verification requested with an imprimitive character."""


# lattice sums
class DivisibilityViolation(BesselSumError):
    """Some basis entry is not divisible by the character modulus."""


class TruncationFailure(BesselSumError):
    """Required truncation radius exceeds the configured cap."""


class BoundaryAmbiguity(BesselSumError):
    """Inexact y sits too close to a box boundary to decide the weight."""


# codes
class EnumerationTooLarge(BesselSumError):
    pass


# heat
class OutOfWindow(BesselSumError):
    pass


class NotLatticePoint(BesselSumError):
    pass


class StepTooLarge(BesselSumError):
    pass


class NotCoprime(BesselSumError):
    pass


# CLI input
class SpecParseError(BesselSumError):
    """Malformed command-line specification string."""

    def __init__(self, message: str, field: Optional[str] = None, position: Optional[int] = None) -> None:
        super().__init__(message, field)
        self.position = position

    def __str__(self) -> str:
        base = super().__str__()
        return f"{base} (at position {self.position})" if self.position is not None else base
