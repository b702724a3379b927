"""Shared fixtures."""

import pytest

from besselsum.core.characters import kronecker_character
from besselsum.core.codes import code_from_generators
from besselsum.core.special_functions import BesselEvalConfig


@pytest.fixture
def cfg():
    return BesselEvalConfig()


@pytest.fixture
def chi12():
    return kronecker_character(12)


@pytest.fixture
def repetition_code():
    """Binary repetition code of length 3."""
    return code_from_generators(2, 3, [[1, 1, 1]])


@pytest.fixture
def isolated_home(tmp_path, monkeypatch):
    """No user config file and no thread override from the environment."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("BESSELSUM_THREADS", raising=False)
    return tmp_path
