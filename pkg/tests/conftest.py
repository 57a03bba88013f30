import pytest

from lapmax.corpus import complete, cycle, path
from lapmax.graph import Graph


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k2():
    return Graph(2, [(1, 2)])
