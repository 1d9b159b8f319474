import pytest
from hypothesis import settings

from qshuffle.context import Context

settings.register_profile("suite", max_examples=30, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ctx_a1():
    return Context("A1")


@pytest.fixture(scope="session")
def ctx_a2():
    return Context("A2")


@pytest.fixture(scope="session")
def ctx_b2():
    return Context("B2")


@pytest.fixture(scope="session")
def ctx_g2():
    return Context("G2")


@pytest.fixture(scope="session")
def ctx_d2():
    # D2 = A1 x A1, the a_ij = 0 rank-2 datum
    return Context("D2")


@pytest.fixture(scope="session")
def ctx_a2_verma():
    return Context("A2", punctures=1)


@pytest.fixture(scope="session")
def ctx_a1_verma():
    return Context("A1", punctures=1)
