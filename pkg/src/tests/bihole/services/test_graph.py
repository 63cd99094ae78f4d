"""
Tests for GraphService
"""

import pytest

from bihole.helper.errors import FamilyConstraintViolation, InvalidParameter
from bihole.services import GraphService
from .services_test_data import GRAPH_FAMILY_SIZE_DATA, GRAPH_FAMILY_VIOLATION_DATA


@pytest.mark.parametrize("family, params, n, size", GRAPH_FAMILY_SIZE_DATA)
def test_generate_sizes(family, params, n, size):
    """
    Test generate()
    """
    graph = GraphService.generate(family, **params)
    assert graph.n == n
    assert graph.size() == size


@pytest.mark.parametrize("family, params", GRAPH_FAMILY_VIOLATION_DATA)
def test_generate_violations(family, params):
    """
    Test generate()
    Family constraints are enforced
    """
    with pytest.raises(FamilyConstraintViolation):
        GraphService.generate(family, **params)


def test_sharpness1_message():
    """
    Test sharpness1()
    The message names the violated inequality
    """
    with pytest.raises(FamilyConstraintViolation, match='b >= 3a\\+4'):
        GraphService.sharpness1(1, 6)


def test_generate_missing_params():
    """
    Test generate()
    Test case when a required parameter is missing
    """
    with pytest.raises(InvalidParameter, match='requires n'):
        GraphService.generate('cycle')
    with pytest.raises(InvalidParameter, match='requires seed'):
        GraphService.generate('gnp', n=4, p=0.5)


def test_sharpness_structure():
    """
    Test sharpness1() and sharpness2()
    The single bridge joins vertex 0 of K_a and vertex 0 of K_b; the K1 vertex has degree 2
    """
    first = GraphService.sharpness1(1, 7)
    assert first.has_edge(0, 1)
    assert first.degree(0) == 1
    assert len(first.components()) == 1

    second = GraphService.sharpness2(6)
    assert second.n == 7
    assert second.degree(4) == 2
    assert sorted(second.degrees()) == [2, 5, 5, 5, 5, 6, 6]


def test_join_counts():
    """
    Test join()
    Orders add, edges add plus |G||H|, every degree grows by the other side's order
    """
    first, second = GraphService.cycle(5), GraphService.path(3)
    joined = GraphService.join(first, second)
    assert joined.n == 8
    assert joined.size() == 5 + 2 + 15
    assert joined.degrees() == tuple(degree + 3 for degree in first.degrees()) + \
        tuple(degree + 5 for degree in second.degrees())


def test_disjoint_union():
    """
    Test disjoint_union()
    """
    union = GraphService.disjoint_union(GraphService.complete(3), GraphService.complete(3))
    assert union.n == 6
    assert union.size() == 6
    assert not union.is_connected()
    assert GraphService.disjoint_union(GraphService.complete(1), GraphService.complete(1)) == \
        GraphService.empty(2)


def test_gnp_deterministic():
    """
    Test gnp()
    Same seed, same graph; p = 0 and p = 1 give the extreme graphs
    """
    assert GraphService.gnp(12, 0.5, 7) == GraphService.gnp(12, 0.5, 7)
    assert GraphService.gnp(6, 0.0, 1) == GraphService.empty(6)
    assert GraphService.gnp(6, 1.0, 1) == GraphService.complete(6)


def test_gnp_sample():
    """
    Test gnp_sample()
    """
    first = list(GraphService.gnp_sample(20, 3, 9, 11))
    second = list(GraphService.gnp_sample(20, 3, 9, 11))
    assert first == second
    assert all(3 <= graph.n <= 9 for graph in first)
    with pytest.raises(InvalidParameter):
        list(GraphService.gnp_sample(1, 5, 4, 0))


def test_petersen_regular():
    """
    Test petersen()
    """
    graph = GraphService.petersen()
    assert set(graph.degrees()) == {3}
    assert graph.size() == 15
