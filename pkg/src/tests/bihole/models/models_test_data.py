"""
Models test data
"""

from bihole.helper.errors import GraphTooLarge, InvalidGraph

# Graph
GRAPH_INVALID_ROWS_DATA = [
    (-1, [], InvalidGraph),
    (2, [0b10], InvalidGraph),
    (2, [0b10, 0b00], InvalidGraph),
    (2, [0b01, 0b00], InvalidGraph),
    (2, [0b100, 0b00], InvalidGraph),
    (65, [0] * 65, GraphTooLarge),
]

# P4 0-1-2-3
GRAPH_PATH_EDGES = [(0, 1), (1, 2), (2, 3)]

GRAPH_CONNECTED_DATA = [
    (1, [], True),
    (3, [(0, 1), (1, 2)], True),
    (4, [(0, 1), (2, 3)], False),
    (3, [], False),
]

# HamiltonSequence on C5 0-1-2-3-4-0
SEQUENCE_INVALID_DATA = [
    ((0, 1, 2, 3), 'path'),
    ((0, 1, 2, 3, 3), 'path'),
    ((0, 2, 1, 3, 4), 'path'),
    ((0, 1, 2, 4, 3), 'cycle'),
]
