import pytest

from indfree import (
    complete_graph,
    disjoint_union,
    empty_graph,
    make_graph,
    path_graph,
    star_graph,
)


@pytest.fixture
def paw():
    return make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def claw():
    return star_graph(3)


@pytest.fixture
def diamond():
    return make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


@pytest.fixture
def p3_k1():
    return disjoint_union(path_graph(3), empty_graph(1))


@pytest.fixture
def k3_k1():
    return disjoint_union(complete_graph(3), empty_graph(1))


@pytest.fixture
def k4_k1():
    return disjoint_union(complete_graph(4), empty_graph(1))
