"""
Subset dynamic programming oracle for Hamilton problems.
"""

from bihole import Config
from bihole.helper.bitset import full_mask, members
from bihole.helper.errors import InvalidParameter, InvalidVertex


class HeldKarpService:
    """
    Held-Karp style DP: reach[mask] is the set of vertices v such that some path
    from a start vertex visits exactly mask and ends at v.
    """

    @staticmethod
    def reach_table(graph, starts):
        """
        :param graph: Graph with n <= Config.DP_MAX_ORDER
        :param starts: bitmask of allowed start vertices
        :return: list indexed by mask
        """
        n = graph.n
        if n > Config.DP_MAX_ORDER:
            raise InvalidParameter(f'Subset DP supports n <= {Config.DP_MAX_ORDER}, got n = {n}')
        rows = graph.rows
        everything = full_mask(n)
        reach = [0] * (1 << n)
        for start in members(starts):
            reach[1 << start] = 1 << start
        for mask in range(1, 1 << n):
            ends = reach[mask]
            if not ends:
                continue
            outside = everything & ~mask
            while outside:
                low = outside & -outside
                outside ^= low
                if rows[low.bit_length() - 1] & ends:
                    reach[mask | low] |= low
        return reach

    @staticmethod
    def is_hamiltonian(graph):
        """
        Hamilton cycle exists; paths start at vertex 0 and must end next to it
        """
        if graph.n < 3:
            return False
        reach = HeldKarpService.reach_table(graph, 1)
        return bool(reach[graph.vertex_mask] & graph.neighbors(0))

    @staticmethod
    def has_path(graph, first, last):
        """
        Hamilton (first, last)-path exists
        """
        if first == last or not (0 <= first < graph.n and 0 <= last < graph.n):
            raise InvalidVertex(f'Invalid endpoints ({first}, {last})')
        reach = HeldKarpService.reach_table(graph, 1 << first)
        return bool(reach[graph.vertex_mask] >> last & 1)

    @staticmethod
    def is_traceable(graph):
        """
        Some Hamilton path exists
        """
        if graph.n == 1:
            return True
        reach = HeldKarpService.reach_table(graph, graph.vertex_mask)
        return bool(reach[graph.vertex_mask])

    @staticmethod
    def path_pairs(graph):
        """
        Unordered pairs (u, v), u < v, joined by a Hamilton path

        :return: set of tuples
        """
        pairs = set()
        for first in range(graph.n):
            ends = HeldKarpService.reach_table(graph, 1 << first)[graph.vertex_mask]
            pairs.update((first, last) for last in members(ends) if first < last)
        return pairs
