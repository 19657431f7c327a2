# File: tests/conftest.py
"""Shared fixtures"""
import os
import sys
from random import Random

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rings.integers import IntegerRing  # noqa: E402
from rings.polynomials import PolynomialRing  # noqa: E402
from rings.residues import PrimeField  # noqa: E402


@pytest.fixture
def rng():
    return Random(20240917)


@pytest.fixture
def zz():
    return IntegerRing()


@pytest.fixture
def f5x():
    return PolynomialRing(5)


@pytest.fixture
def f7x():
    return PolynomialRing(7)


@pytest.fixture
def gf11():
    return PrimeField(11)


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """Keep EXACTLA_* variables from the developer's shell out of tests"""
    for name in list(os.environ):
        if name.startswith("EXACTLA_"):
            monkeypatch.delenv(name, raising=False)
