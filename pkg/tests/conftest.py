import pytest

from toric_schubert.root_system import cartan_matrix


@pytest.fixture
def A2():
    return cartan_matrix("A", 2)


@pytest.fixture
def A3():
    return cartan_matrix("A", 3)


@pytest.fixture
def B2():
    return cartan_matrix("B", 2)


@pytest.fixture
def G2():
    return cartan_matrix("G", 2)
