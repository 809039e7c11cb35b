"""Shared fixtures for the qtoric test suite."""

import pytest

from qtoric.models.quasitoric import QuasitoricData
from qtoric.services.cache import graded_piece_cache
from qtoric.services.quasitoric_service import preset_cpn, preset_hirzebruch, product


@pytest.fixture(autouse=True)
def clear_graded_piece_cache():
    """Start every test with an empty in-memory graded-piece cache."""
    graded_piece_cache.clear()
    yield
    graded_piece_cache.clear()


@pytest.fixture
def cp1() -> QuasitoricData:
    """Complex projective line."""
    return preset_cpn(1)


@pytest.fixture
def cp2() -> QuasitoricData:
    """Complex projective plane."""
    return preset_cpn(2)


@pytest.fixture
def cp1xcp1(cp1) -> QuasitoricData:
    """Product of two projective lines over the square."""
    return product(cp1, cp1)


@pytest.fixture
def hirzebruch() -> QuasitoricData:
    """Hirzebruch surface with twist 3."""
    return preset_hirzebruch(3)
