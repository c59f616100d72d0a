import pytest

from toricsmooth.catalog import configuration_labeler, product_polytope
from toricsmooth.minkowski import enumerate_decomposition_data
from toricsmooth.symmetry import orbits


@pytest.fixture(scope="session")
def p99():
    return product_polytope(9, 9)


@pytest.fixture(scope="session")
def d99(p99):
    return next(iter(enumerate_decomposition_data(p99)))


@pytest.fixture(scope="session")
def p66():
    return product_polytope(6, 6)


@pytest.fixture(scope="session")
def p66_orbits(p66):
    return orbits(p66, label=configuration_labeler(p66, 6, 6))


def class_of(label: str) -> tuple[int, int]:
    a, b = label.strip("()").split(",")
    return int(a), int(b)
