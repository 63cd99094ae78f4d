"""
Tests for HamiltonSequence and GiveUp
"""

import pytest

from bihole.helper.enums import SequenceKind
from bihole.helper.errors import InvalidSequence, InvalidVertex
from bihole.models import GiveUp, Graph, HamiltonSequence
from .models_test_data import SEQUENCE_INVALID_DATA


@pytest.fixture()
def cycle_graph():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture()
def path(cycle_graph):
    return HamiltonSequence((0, 1, 2, 3, 4), SequenceKind.Path, cycle_graph)


def test_valid_path_and_cycle(cycle_graph, path):
    """
    Test HamiltonSequence.validate()
    Test case for a valid path and the cycle closing it
    """
    path.validate()
    assert HamiltonSequence((2, 1, 0, 4, 3), SequenceKind.Cycle, cycle_graph).is_valid()


@pytest.mark.parametrize("vertices, kind", SEQUENCE_INVALID_DATA)
def test_invalid_sequences(cycle_graph, vertices, kind):
    """
    Test HamiltonSequence.validate()
    Missing or repeated vertices and non-adjacent consecutive vertices are rejected
    """
    sequence = HamiltonSequence(vertices, SequenceKind(kind), cycle_graph)
    with pytest.raises(InvalidSequence):
        sequence.validate()
    assert not sequence.is_valid()


def test_orientation(path):
    """
    Test positions, successors, predecessors and segments
    """
    assert path.at(1) == 0
    assert path.position(3) == 4
    assert path.endpoints == (0, 4)
    assert path.successor(2) == 3
    assert path.successor(4) is None
    assert path.predecessor(0) is None
    assert path.successors({0, 4}) == {1}
    assert path.predecessors({0, 2}) == {1}
    assert path.segment(1, 3) == (1, 2, 3)
    assert path.reverse_segment(1, 3) == (3, 2, 1)
    assert path.reversed().vertices == (4, 3, 2, 1, 0)
    with pytest.raises(InvalidVertex):
        path.segment(3, 1)
    with pytest.raises(InvalidVertex):
        path.at(6)


def test_consecutive_pairs(cycle_graph, path):
    """
    Test consecutive_pairs()
    A cycle adds the closing pair
    """
    assert len(path.consecutive_pairs()) == 4
    cycle = HamiltonSequence(path.vertices, SequenceKind.Cycle, cycle_graph)
    assert cycle.consecutive_pairs()[-1] == (4, 0)


def test_give_up_is_falsy():
    """
    Test GiveUp
    """
    outcome = GiveUp(12, 'budget exhausted')
    assert not outcome
    assert outcome.rotations == 12
