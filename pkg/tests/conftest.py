import pytest

from circulant_elgamal import generate


@pytest.fixture(scope="session")
def params311():
    # the main desk-scale cell: group order divides 2^30 - 1
    return generate(3, 11, seed=7)


@pytest.fixture(scope="session")
def params15():
    return generate(1, 5, seed=7)
