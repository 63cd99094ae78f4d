"""
Hamilton sequence model
"""
from bihole.helper.enums import SequenceKind
from bihole.helper.errors import InvalidSequence, InvalidVertex


class HamiltonSequence:
    """
    Ordered vertex sequence v1..vn of a Hamilton path or cycle, oriented from v1 to vn.

    :param vertices - tuple of int | v1..vn
    :param kind - SequenceKind | path or cycle
    :param graph - Graph | the ambient graph
    """

    __slots__ = ('vertices', 'kind', 'graph', '_position')

    def __init__(self, vertices, kind, graph):
        self.vertices = tuple(vertices)
        self.kind = kind
        self.graph = graph
        self._position = {vertex: index for index, vertex in enumerate(self.vertices)}

    @property
    def n(self):
        """
        Number of vertices on the sequence
        """
        return len(self.vertices)

    @property
    def endpoints(self):
        """
        (v1, vn)
        """
        return self.vertices[0], self.vertices[-1]

    def at(self, index):
        """
        v_index, 1-based
        """
        if not 1 <= index <= self.n:
            raise InvalidVertex(f'Position {index} outside 1..{self.n}')
        return self.vertices[index - 1]

    def position(self, vertex):
        """
        1-based position of a vertex on the sequence
        """
        if vertex not in self._position:
            raise InvalidVertex(f'Vertex {vertex} is not on the sequence')
        return self._position[vertex] + 1

    def successor(self, vertex):
        """
        x+, the immediate successor; None for vn
        """
        index = self.position(vertex)
        return self.vertices[index] if index < self.n else None

    def predecessor(self, vertex):
        """
        x-, the immediate predecessor; None for v1
        """
        index = self.position(vertex)
        return self.vertices[index - 2] if index > 1 else None

    def successors(self, vertex_set):
        """
        S+ = {x+ : x in S, x != vn}
        """
        return {self.successor(vertex) for vertex in vertex_set
                if vertex != self.vertices[-1]}

    def predecessors(self, vertex_set):
        """
        S- = {x- : x in S, x != v1}
        """
        return {self.predecessor(vertex) for vertex in vertex_set
                if vertex != self.vertices[0]}

    def segment(self, first, last):
        """
        P[x, y] following the orientation, x must not come after y
        """
        start, stop = self.position(first), self.position(last)
        if start > stop:
            raise InvalidVertex(f'Vertex {first} comes after {last}')
        return self.vertices[start - 1:stop]

    def reverse_segment(self, first, last):
        """
        The segment between x and y traversed from y back to x
        """
        return tuple(reversed(self.segment(first, last)))

    def reversed(self):
        """
        Same sequence with the opposite orientation
        """
        return HamiltonSequence(tuple(reversed(self.vertices)), self.kind, self.graph)

    def consecutive_pairs(self):
        """
        Pairs of consecutive vertices, including vn v1 for a cycle
        """
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.kind is SequenceKind.Cycle and self.n > 2:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return pairs

    def validate(self):
        """
        Raise InvalidSequence unless the sequence is a Hamilton path/cycle of its graph
        """
        graph = self.graph
        if sorted(self.vertices) != list(range(graph.n)):
            raise InvalidSequence(f'{list(self.vertices)} is not a permutation of 0..{graph.n - 1}')
        if self.kind is SequenceKind.Cycle and self.n < 3:
            raise InvalidSequence('A cycle needs at least three vertices')
        for u, v in self.consecutive_pairs():
            if not graph.has_edge(u, v):
                raise InvalidSequence(f'Consecutive vertices {u} and {v} are not adjacent')

    def is_valid(self):
        """
        validate() as a bool
        """
        try:
            self.validate()
        except InvalidSequence:
            return False
        return True

    def __eq__(self, other):
        if not isinstance(other, HamiltonSequence):
            return NotImplemented
        return (self.vertices, self.kind, self.graph) == (other.vertices, other.kind, other.graph)

    def __hash__(self):
        return hash((self.vertices, self.kind))

    def __repr__(self):
        return f'<HamiltonSequence {self.kind.value} {list(self.vertices)}>'


class GiveUp:
    """
    Outcome of a bounded constructive search that found nothing

    :param rotations - int | rotations spent
    :param reason - str
    """

    __slots__ = ('rotations', 'reason')

    def __init__(self, rotations, reason):
        self.rotations = rotations
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return f'<GiveUp after {self.rotations} rotations: {self.reason}>'
