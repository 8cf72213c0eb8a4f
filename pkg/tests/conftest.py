
import pytest

from diophmon import apery_box, normalize_equation


@pytest.fixture(scope="session")
def m457():
    return normalize_equation([4, 5, 7])


@pytest.fixture(scope="session")
def m236():
    return normalize_equation([2, 3, 6])


@pytest.fixture(scope="session")
def m1112():
    return normalize_equation([1, 1, 1, 2])


@pytest.fixture(scope="session")
def ap457(m457):
    return apery_box(m457)
