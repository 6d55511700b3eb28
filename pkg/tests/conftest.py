import pytest

from mixedsums import build_field


@pytest.fixture(scope="session")
def f5():
    return build_field(5, 1)


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def f13():
    return build_field(13, 1)


@pytest.fixture(scope="session")
def f17():
    return build_field(17, 1)


@pytest.fixture(scope="session")
def f25():
    return build_field(5, 2)
