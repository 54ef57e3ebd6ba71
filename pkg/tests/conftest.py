import pytest

from nscrush import library


@pytest.fixture(scope="session")
def single_tet():
    return library.single_tet()


@pytest.fixture(scope="session")
def double():
    return library.doubled_tet()


@pytest.fixture(scope="session")
def s2xs1():
    return library.s2xs1_two_tet()


@pytest.fixture(scope="session")
def three_tet(request):
    return library.three_tet_fixture()


@pytest.fixture(scope="session")
def zero_efficient_5():
    """5-tet layered fixture certified 0-efficient in test_acceptance."""
    return library.layered_fixture((0, 1, 1, 0))
