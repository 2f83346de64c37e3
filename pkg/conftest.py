"""Shared pytest fixtures for lpcc tests."""

import os

import pytest

from lpcc_core import get_settings
from lpcc_corpus import build_ex1, build_ex2, build_ex3, build_ex4


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch):
    """Fresh settings per test, ignoring any LPCC_* variables in the shell."""
    for key in list(os.environ):
        if key.startswith("LPCC_"):
            monkeypatch.delenv(key)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def ex1():
    """Two-level instance with three extreme supported points."""
    return build_ex1()


@pytest.fixture
def ex2():
    """Scalar instance where no penalty weight gives complementarity."""
    return build_ex2()


@pytest.fixture
def ex3():
    """Instance whose penalty solves are complementary for L > 2."""
    return build_ex3()


@pytest.fixture
def ex4():
    """Nonlinear black-box instance at L = 0."""
    return build_ex4()
