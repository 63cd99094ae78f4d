"""
Graph model
"""
from collections import deque

from bihole.helper.bitset import full_mask, lowest, mask_of, members, popcount
from bihole.helper.constants import MAX_ORDER
from bihole.helper.errors import GraphTooLarge, InvalidGraph, InvalidVertex


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1

    :param n - int | order |G|
    :param rows - tuple of int | rows[v] is the neighbourhood N(v) as a bitmask
    """

    __slots__ = ('_n', '_rows', '_degrees')

    def __init__(self, n, rows):
        if n < 0:
            raise InvalidGraph(f'Negative order {n}')
        if n > MAX_ORDER:
            raise GraphTooLarge(f'Order {n} is above the supported maximum {MAX_ORDER}')
        rows = tuple(rows)
        if len(rows) != n:
            raise InvalidGraph(f'Expected {n} adjacency rows, got {len(rows)}')
        everything = full_mask(n)
        for vertex, row in enumerate(rows):
            if row & ~everything:
                raise InvalidGraph(f'Vertex {vertex} has a neighbour outside 0..{n - 1}')
            if row >> vertex & 1:
                raise InvalidGraph(f'Vertex {vertex} is self-adjacent')
            for other in members(row):
                if not rows[other] >> vertex & 1:
                    raise InvalidGraph(f'Adjacency {vertex}-{other} is not symmetric')
        self._n = n
        self._rows = rows
        self._degrees = tuple(popcount(row) for row in rows)

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a graph from an edge list

        :param n: order
        :param edges: iterable of vertex pairs
        :return: Graph
        """
        if n > MAX_ORDER:
            raise GraphTooLarge(f'Order {n} is above the supported maximum {MAX_ORDER}')
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f'Edge {u}-{v} outside 0..{n - 1}')
            if u == v:
                raise InvalidGraph(f'Loop at vertex {u}')
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def n(self):
        """
        Order |G|
        """
        return self._n

    @property
    def rows(self):
        """
        Adjacency bitmasks
        """
        return self._rows

    @property
    def vertex_mask(self):
        """
        V(G) as a bitmask
        """
        return full_mask(self._n)

    def size(self):
        """
        e(G)
        """
        return sum(self._degrees) // 2

    def neighbors(self, vertex):
        """
        N(v) as a bitmask
        """
        return self._rows[vertex]

    def degree(self, vertex):
        """
        d(v)
        """
        return self._degrees[vertex]

    def degrees(self):
        """
        Degree sequence indexed by vertex
        """
        return self._degrees

    def has_edge(self, u, v):
        """
        u ~ v
        """
        return bool(self._rows[u] >> v & 1)

    def edges(self):
        """
        E(G) as sorted pairs (u, v) with u < v
        """
        return [(u, v) for u in range(self._n) for v in members(self._rows[u]) if u < v]

    def non_edges(self):
        """
        Non-adjacent pairs (u, v) with u < v
        """
        return [(u, v) for u in range(self._n) for v in range(u + 1, self._n)
                if not self._rows[u] >> v & 1]

    def is_complete(self):
        """
        True when every pair of distinct vertices is adjacent (K0 and K1 included)
        """
        return all(degree == self._n - 1 for degree in self._degrees)

    def closed_neighborhood(self, vertex_set):
        """
        S together with N(S), as a bitmask
        """
        cover = vertex_set
        rest = vertex_set
        while rest:
            low = rest & -rest
            cover |= self._rows[low.bit_length() - 1]
            rest ^= low
        return cover

    def neighborhood(self, vertex_set):
        """
        N(S), the union of neighbourhoods of S minus S itself
        """
        return self.closed_neighborhood(vertex_set) & ~vertex_set

    def edges_between(self, first, second):
        """
        [S, T], the edges with one end in S and the other in T

        :param first: bitmask S
        :param second: bitmask T
        :return: list of pairs (s, t)
        """
        return [(u, v) for u in members(first) for v in members(self._rows[u] & second)]

    def is_connected(self, within=None):
        """
        Connectivity of G[within] (whole graph by default); the empty graph counts as connected

        :param within: bitmask of the vertices to keep
        :return: bool
        """
        if within is None:
            within = self.vertex_mask
        if not within:
            return True
        seen = 1 << lowest(within)
        frontier = seen
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= self._rows[low.bit_length() - 1]
                rest ^= low
            frontier = reach & within & ~seen
            seen |= frontier
        return seen == within

    def components(self):
        """
        Connected components as bitmasks, ordered by smallest vertex
        """
        left = self.vertex_mask
        result = []
        while left:
            start = lowest(left)
            seen = 1 << start
            queue = deque([start])
            while queue:
                vertex = queue.popleft()
                fresh = self._rows[vertex] & ~seen
                seen |= fresh
                queue.extend(members(fresh))
            result.append(seen)
            left &= ~seen
        return result

    def induced(self, vertex_set):
        """
        G[S], re-indexed so that the members of S keep their relative order

        :param vertex_set: bitmask S
        :return: Graph
        """
        kept = members(vertex_set)
        index = {vertex: position for position, vertex in enumerate(kept)}
        rows = [mask_of(index[other] for other in members(self._rows[vertex] & vertex_set))
                for vertex in kept]
        return Graph(len(kept), rows)

    def remove(self, vertex_set):
        """
        G - S
        """
        return self.induced(self.vertex_mask & ~vertex_set)

    def with_edge(self, u, v):
        """
        G + uv
        """
        if u == v:
            raise InvalidGraph(f'Loop at vertex {u}')
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other.n and self._rows == other.rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return f'<Graph n {self._n}, e {self.size()}>'
