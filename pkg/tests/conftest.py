import pytest

from oed import Graph, gen_family


@pytest.fixture
def k2() -> Graph:
    return gen_family("complete", 2)


@pytest.fixture
def k3() -> Graph:
    return gen_family("complete", 3)


@pytest.fixture
def p3() -> Graph:
    return gen_family("path", 3)


@pytest.fixture
def cube() -> Graph:
    return gen_family("cube_q3")
