"""
Exact Hamilton cycle, path and connectedness decisions.
"""

from bihole import LOGGER
from bihole.helper.bitset import members
from bihole.helper.enums import SequenceKind
from bihole.helper.errors import InvalidVertex, OrderOutOfRange
from bihole.models import Graph, HamiltonSequence
from bihole.services.graph import GraphService


class _PathSearch:
    """
    Backtracking over path extensions from a fixed start.

    Exactly one of the modes applies: closing (last vertex adjacent to the start),
    target (last vertex fixed) or free (any last vertex). Pruning keeps the unvisited
    vertices plus the current end connected and rejects states where an unvisited vertex
    has too few usable neighbours left.
    """

    def __init__(self, graph, start, target=None, closing=False):
        self.rows = graph.rows
        self.degrees = graph.degrees()
        self.graph = graph
        self.start = start
        self.target = target
        self.closing = closing
        self.path = [start]

    def run(self):
        """
        :return: list of vertices or None
        """
        unvisited = self.graph.vertex_mask & ~(1 << self.start)
        if self._extend(self.start, unvisited):
            return list(self.path)
        return None

    def _feasible(self, end, unvisited):
        if not self.graph.is_connected(within=unvisited | (1 << end)):
            return False
        pool = unvisited | (1 << end)
        if self.closing:
            pool |= 1 << self.start
            if not self.rows[self.start] & unvisited:
                return False
        loose_ends = 0
        rest = unvisited
        while rest:
            low = rest & -rest
            vertex = low.bit_length() - 1
            rest ^= low
            usable = bin(self.rows[vertex] & pool).count('1')
            if usable == 0:
                return False
            if usable == 1:
                if self.closing:
                    return False
                if self.target is not None and vertex != self.target:
                    return False
                loose_ends += 1
                if loose_ends > 1:
                    return False
        return True

    def _extend(self, end, unvisited):
        if not unvisited:
            if self.closing:
                return bool(self.rows[end] >> self.start & 1)
            return self.target is None or end == self.target
        if not self._feasible(end, unvisited):
            return False
        candidates = sorted(members(self.rows[end] & unvisited),
                            key=lambda vertex: (self.degrees[vertex], vertex))
        for vertex in candidates:
            if vertex == self.target and unvisited != 1 << vertex:
                continue
            self.path.append(vertex)
            if self._extend(vertex, unvisited & ~(1 << vertex)):
                return True
            self.path.pop()
        return False


class HamiltonService:
    """
    Class with Hamilton problems
    """

    @staticmethod
    def _check_vertex(graph, vertex):
        if not 0 <= vertex < graph.n:
            raise InvalidVertex(f'Vertex {vertex} outside 0..{graph.n - 1}')

    @staticmethod
    def find_hamilton_cycle(graph):
        """
        Exact Hamilton cycle search starting at the smallest vertex of minimum degree

        :param graph: Graph
        :return: HamiltonSequence of kind cycle, or None
        """
        if graph.n < 3:
            LOGGER.debug('No Hamilton cycle on %r: order', graph)
            return None
        degrees = graph.degrees()
        if min(degrees) < 2 or not graph.is_connected():
            return None
        start = min(range(graph.n), key=lambda vertex: (degrees[vertex], vertex))
        vertices = _PathSearch(graph, start, closing=True).run()
        if vertices is None:
            return None
        return HamiltonSequence(vertices, SequenceKind.Cycle, graph)

    @staticmethod
    def find_hamilton_path(graph, first, last):
        """
        Exact Hamilton (first, last)-path search

        :param graph: Graph
        :param first: start vertex
        :param last: end vertex, distinct from first
        :return: HamiltonSequence of kind path, or None
        """
        HamiltonService._check_vertex(graph, first)
        HamiltonService._check_vertex(graph, last)
        if first == last:
            raise InvalidVertex(f'Path endpoints must differ, got {first} twice')
        if not graph.is_connected():
            return None
        vertices = _PathSearch(graph, first, target=last).run()
        if vertices is None:
            return None
        return HamiltonSequence(vertices, SequenceKind.Path, graph)

    @staticmethod
    def find_any_hamilton_path(graph):
        """
        Exact Hamilton path search with free endpoints.
        A vertex of degree one must be an endpoint, so the search starts there when one exists.

        :param graph: Graph with n >= 1
        :return: HamiltonSequence of kind path, or None
        """
        if graph.n < 1:
            raise OrderOutOfRange('Traceability of the empty graph is undefined')
        if graph.n == 1:
            return HamiltonSequence((0,), SequenceKind.Path, graph)
        degrees = graph.degrees()
        if min(degrees) == 0 or not graph.is_connected():
            return None
        leaves = [vertex for vertex in range(graph.n) if degrees[vertex] == 1]
        if len(leaves) > 2:
            return None
        starts = leaves[:1] or sorted(range(graph.n), key=lambda vertex: (degrees[vertex], vertex))
        for start in starts:
            vertices = _PathSearch(graph, start).run()
            if vertices is not None:
                return HamiltonSequence(vertices, SequenceKind.Path, graph)
        return None

    @staticmethod
    def cone(graph):
        """
        G v K1 with the apex as the last vertex
        """
        return GraphService.join(graph, GraphService.complete(1))

    @staticmethod
    def is_traceable(graph):
        """
        :param graph: Graph with n >= 1
        :return: (bool, HamiltonSequence or None)
        """
        witness = HamiltonService.find_any_hamilton_path(graph)
        return witness is not None, witness

    @staticmethod
    def is_traceable_via_cone(graph):
        """
        Traceability read off a Hamilton cycle of the cone; the apex is cut out of the cycle.
        K1 is traceable although its cone K2 has no cycle.

        :param graph: Graph with n >= 1
        :return: (bool, HamiltonSequence or None)
        """
        if graph.n < 1:
            raise OrderOutOfRange('Traceability of the empty graph is undefined')
        if graph.n == 1:
            return True, HamiltonSequence((0,), SequenceKind.Path, graph)
        cycle = HamiltonService.find_hamilton_cycle(HamiltonService.cone(graph))
        if cycle is None:
            return False, None
        apex = graph.n
        index = cycle.vertices.index(apex)
        vertices = cycle.vertices[index + 1:] + cycle.vertices[:index]
        return True, HamiltonSequence(vertices, SequenceKind.Path, graph)

    @staticmethod
    def is_hamiltonian_connected(graph):
        """
        Every unordered pair joined by a Hamilton path; pairs are tried in lexicographic order

        :param graph: Graph with n >= 2
        :return: (bool, failing pair or None)
        """
        if graph.n < 2:
            raise OrderOutOfRange(f'Hamiltonian-connectedness needs n >= 2, got n = {graph.n}')
        for first in range(graph.n):
            for last in range(first + 1, graph.n):
                if HamiltonService.find_hamilton_path(graph, first, last) is None:
                    return False, (first, last)
        return True, None

    @staticmethod
    def sequence(graph, vertices, kind):
        """
        Build and validate a HamiltonSequence

        :param graph: Graph
        :param vertices: iterable of vertex ids
        :param kind: SequenceKind
        :return: HamiltonSequence
        """
        if not isinstance(graph, Graph):
            raise TypeError(f'Expected a Graph, got {type(graph).__name__}')
        result = HamiltonSequence(vertices, kind, graph)
        result.validate()
        return result
