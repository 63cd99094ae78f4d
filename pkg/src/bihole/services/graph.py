"""
Graph constructions and generators.
"""

import numpy as np

from bihole.helper.bitset import full_mask
from bihole.helper.enums import FamilyId
from bihole.helper.errors import FamilyConstraintViolation, InvalidParameter
from bihole.models import Graph


class GraphService:
    """
    Class with graph constructions
    """

    @staticmethod
    def join(first, second):
        """
        G v H: disjoint union plus every edge between the two sides

        :param first: Graph, keeps vertices 0..|G|-1
        :param second: Graph, shifted to |G|..|G|+|H|-1
        :return: Graph
        """
        shift = first.n
        rows = [row | (full_mask(second.n) << shift) for row in first.rows]
        rows.extend((row << shift) | full_mask(shift) for row in second.rows)
        return Graph(shift + second.n, rows)

    @staticmethod
    def disjoint_union(first, second):
        """
        Block-diagonal union, no edge between the sides
        """
        shift = first.n
        rows = list(first.rows)
        rows.extend(row << shift for row in second.rows)
        return Graph(shift + second.n, rows)

    @staticmethod
    def complete(n):
        """
        K_n
        """
        everything = full_mask(n)
        return Graph(n, [everything & ~(1 << vertex) for vertex in range(n)])

    @staticmethod
    def empty(n):
        """
        Edgeless graph on n vertices
        """
        return Graph(n, [0] * n)

    @staticmethod
    def path(n):
        """
        P_n: 0-1-...-(n-1)
        """
        return Graph.from_edges(n, [(vertex, vertex + 1) for vertex in range(n - 1)])

    @staticmethod
    def cycle(n):
        """
        C_n: 0-1-...-(n-1)-0
        """
        if n < 3:
            raise FamilyConstraintViolation(f'cycle requires n >= 3, got n = {n}')
        return Graph.from_edges(n, [(vertex, (vertex + 1) % n) for vertex in range(n)])

    @staticmethod
    def star(leaves):
        """
        K_{1,leaves} with the centre as vertex 0
        """
        return Graph.from_edges(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])

    @staticmethod
    def complete_bipartite(first, second):
        """
        K_{first,second}, the first side is 0..first-1
        """
        return GraphService.join(GraphService.empty(first), GraphService.empty(second))

    @staticmethod
    def petersen():
        """
        Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5
        """
        edges = []
        for vertex in range(5):
            edges.append((vertex, (vertex + 1) % 5))
            edges.append((vertex, vertex + 5))
            edges.append((vertex + 5, (vertex + 2) % 5 + 5))
        return Graph.from_edges(10, edges)

    @staticmethod
    def gnp(n, p, seed):
        """
        Erdos-Renyi G(n, p); pair (i, j), i < j, visited column by column as in graph6,
        is an edge when the next PCG64 double is below p

        :param n: order
        :param p: edge probability in [0, 1]
        :param seed: int seed
        :return: Graph
        """
        if not 0 <= p <= 1:
            raise FamilyConstraintViolation(f'gnp requires 0 <= p <= 1, got p = {p}')
        generator = np.random.Generator(np.random.PCG64(seed))
        draws = generator.random(n * (n - 1) // 2)
        edges = []
        index = 0
        for j in range(1, n):
            for i in range(j):
                if draws[index] < p:
                    edges.append((i, j))
                index += 1
        return Graph.from_edges(n, edges)

    @staticmethod
    def gnp_sample(count, min_order, max_order, seed):
        """
        Deterministic stream of random graphs with order and density drawn per graph

        :param count: number of graphs
        :param min_order: smallest order
        :param max_order: largest order
        :param seed: int seed
        :return: generator of Graph
        """
        if min_order > max_order:
            raise InvalidParameter(f'min_order {min_order} is above max_order {max_order}')
        generator = np.random.Generator(np.random.PCG64(seed))
        for _ in range(count):
            n = int(generator.integers(min_order, max_order + 1))
            p = float(generator.random())
            yield GraphService.gnp(n, p, int(generator.integers(0, 2 ** 63 - 1)))

    @staticmethod
    def sharpness1(a, b):
        """
        K_a and K_b side by side plus the single edge 0 ~ a joining their first vertices
        """
        if a < 1:
            raise FamilyConstraintViolation(f'sharpness1 requires a >= 1, got a = {a}')
        if b < 3 * a + 4:
            raise FamilyConstraintViolation(
                f'sharpness1 requires b >= 3a+4, got a = {a}, b = {b}'
            )
        union = GraphService.disjoint_union(GraphService.complete(a), GraphService.complete(b))
        return union.with_edge(0, a)

    @staticmethod
    def sharpness2(a):
        """
        (K_{a-2} u K_1) v K_2, vertex order K_{a-2}, K_1, K_2
        """
        if a < 3:
            raise FamilyConstraintViolation(f'sharpness2 requires a >= 3, got a = {a}')
        base = GraphService.disjoint_union(GraphService.complete(a - 2), GraphService.complete(1))
        return GraphService.join(base, GraphService.complete(2))

    @staticmethod
    def generate(family, **params):
        """
        Build a member of a named family

        :param family: FamilyId or its value
        :param params: n, a, b, p, seed as the family needs
        :return: Graph
        """
        family = FamilyId(family)
        builders = {
            FamilyId.Complete: (GraphService.complete, ('n',)),
            FamilyId.Cycle: (GraphService.cycle, ('n',)),
            FamilyId.Path: (GraphService.path, ('n',)),
            FamilyId.Empty: (GraphService.empty, ('n',)),
            FamilyId.Star: (GraphService.star, ('n',)),
            FamilyId.CompleteBipartite: (GraphService.complete_bipartite, ('a', 'b')),
            FamilyId.Petersen: (GraphService.petersen, ()),
            FamilyId.Gnp: (GraphService.gnp, ('n', 'p', 'seed')),
            FamilyId.Sharpness1: (GraphService.sharpness1, ('a', 'b')),
            FamilyId.Sharpness2: (GraphService.sharpness2, ('a',)),
        }
        builder, names = builders[family]
        missing = [name for name in names if params.get(name) is None]
        if missing:
            raise InvalidParameter(f'{family.value} requires {", ".join(missing)}')
        for name in ('n', 'a', 'b'):
            if name in names and params[name] < 0:
                raise InvalidParameter(f'{family.value} requires {name} >= 0')
        return builder(*(params[name] for name in names))
