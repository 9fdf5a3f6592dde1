import pytest

from bskit.embedding import enumerate_ball
from bskit.presentation import make_bs, make_matrix_group


@pytest.fixture(scope="session")
def bs23():
    return make_bs(2, 3)


@pytest.fixture(scope="session")
def bs12():
    return make_bs(1, 2)


@pytest.fixture(scope="session")
def bs52():
    return make_bs(5, 2)


@pytest.fixture(scope="session")
def asc2():
    # ascending HNN of Z^2: A = [[2,1],[0,2]], B = identity
    return make_matrix_group([[2, 1], [0, 2]], [[1, 0], [0, 1]])


@pytest.fixture(scope="session")
def bs23_ball6(bs23):
    return enumerate_ball(6, bs23)


@pytest.fixture(scope="session")
def bs23_ball10(bs23):
    return enumerate_ball(10, bs23)


@pytest.fixture(scope="session")
def bs12_ball10(bs12):
    return enumerate_ball(10, bs12)


@pytest.fixture(scope="session")
def asc2_ball5(asc2):
    return enumerate_ball(5, asc2)
