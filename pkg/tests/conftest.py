import pytest

from gabrielq.corpus import load_ring_file
from gabrielq.quotient_ring import RmContext


@pytest.fixture(scope="session")
def R1():
    return load_ring_file("R1")


@pytest.fixture(scope="session")
def R2():
    return load_ring_file("R2")


@pytest.fixture(scope="session")
def R3():
    return load_ring_file("R3")


@pytest.fixture(scope="session")
def ctx1(R1):
    return RmContext(R1, 1)


@pytest.fixture(scope="session")
def ctx2(R2):
    return RmContext(R2, 1)


@pytest.fixture(scope="session")
def ctx3(R3):
    return RmContext(R3, 1)
