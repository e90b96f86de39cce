import pytest

from hkprod import Ring


@pytest.fixture
def F2xy():
    return Ring(2, ["x", "y"])


@pytest.fixture
def F3xy():
    return Ring(3, ["x", "y"])


@pytest.fixture
def F5xy():
    return Ring(5, ["x", "y"])


@pytest.fixture
def F2xyz():
    return Ring(2, ["x", "y", "z"])


@pytest.fixture
def F3xyz():
    return Ring(3, ["x", "y", "z"])


@pytest.fixture
def F5xyz():
    return Ring(5, ["x", "y", "z"])


@pytest.fixture
def fermat():
    return Ring(2, ["x", "y", "z"], relations=["x^3+y^3+z^3"])
