"""
Degree invariants, vertex connectivity and bipartite holes.
"""

from itertools import combinations

from bihole import LOGGER, Config
from bihole.helper.bitset import full_mask, mask_of, members, popcount
from bihole.helper.constants import INFINITY
from bihole.helper.errors import CrossCheckFailure, InvalidParameter, OrderOutOfRange
from bihole.models import CoverageProfile, HoleNumberCertificate, HoleWitness


class InvariantService:
    """
    Class with graph invariants
    """

    @staticmethod
    def min_degree(graph):
        """
        delta(G)

        :param graph: Graph with n >= 1
        :return: int
        """
        if graph.n < 1:
            raise OrderOutOfRange('Minimum degree of the empty graph is undefined')
        return min(graph.degrees())

    @staticmethod
    def sigma2(graph):
        """
        Minimum of d(u) + d(v) over non-adjacent pairs u != v; INFINITY when G is complete

        :param graph: Graph
        :return: int or INFINITY
        """
        degrees = graph.degrees()
        best = INFINITY
        everything = graph.vertex_mask
        for u in range(graph.n):
            strangers = everything & ~graph.neighbors(u) & ~full_mask(u + 1)
            for v in members(strangers):
                best = min(best, degrees[u] + degrees[v])
        return best

    @staticmethod
    def _disconnected_by_deletion(graph, size):
        everything = graph.vertex_mask
        for removed in combinations(range(graph.n), size):
            if not graph.is_connected(within=everything & ~mask_of(removed)):
                return True
        return False

    @staticmethod
    def kappa(graph):
        """
        Vertex connectivity: n-1 for complete graphs, otherwise the smallest number of
        vertices whose deletion disconnects G, found by increasing deletion size

        :param graph: Graph with n >= 1
        :return: int
        """
        if graph.n < 1:
            raise OrderOutOfRange('Connectivity of the empty graph is undefined')
        if graph.is_complete():
            return graph.n - 1
        for size in range(graph.n - 1):
            if InvariantService._disconnected_by_deletion(graph, size):
                return size
        # a non-complete graph is disconnected by deleting all but a non-adjacent pair
        raise CrossCheckFailure(f'No separating set found in non-complete {graph!r}')

    @staticmethod
    def is_k_connected(graph, k):
        """
        kappa(G) >= k, testing only deletion sets smaller than k

        :param graph: Graph
        :param k: int
        :return: bool
        """
        if k <= 0:
            return True
        if graph.is_complete():
            return graph.n - 1 >= k
        if graph.n <= k:
            return False
        return not any(InvariantService._disconnected_by_deletion(graph, size)
                       for size in range(k))

    @staticmethod
    def coverage_profile(graph):
        """
        f(s) = max over |A| = s of n - |A u N(A)|, for s = 0..n

        :param graph: Graph
        :return: CoverageProfile
        """
        n = graph.n
        if n <= Config.PROFILE_DP_MAX_ORDER:
            return CoverageProfile(InvariantService._profile_by_subset_dp(graph))
        return CoverageProfile(InvariantService._profile_by_combinations(graph))

    @staticmethod
    def _profile_by_subset_dp(graph):
        n = graph.n
        closed = [row | (1 << vertex) for vertex, row in enumerate(graph.rows)]
        best = [0] * (n + 1)
        best[0] = n
        cover = [0] * (1 << n)
        size = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            rest = mask ^ low
            cover[mask] = cover[rest] | closed[low.bit_length() - 1]
            size[mask] = size[rest] + 1
            uncovered = n - bin(cover[mask]).count('1')
            if uncovered > best[size[mask]]:
                best[size[mask]] = uncovered
        return best

    @staticmethod
    def _profile_by_combinations(graph):
        n = graph.n
        best = [0] * (n + 1)
        best[0] = n
        for s in range(1, n + 1):
            ceiling = n - s
            for chosen in combinations(range(n), s):
                uncovered = n - popcount(graph.closed_neighborhood(mask_of(chosen)))
                if uncovered > best[s]:
                    best[s] = uncovered
                    if uncovered == ceiling:
                        break
            if best[s] == 0:
                # f is non-increasing, the rest stays 0
                break
        return best

    @staticmethod
    def find_hole(graph, s, t):
        """
        Find an (s, t)-bipartite-hole: lexicographically smallest A of size s leaving at least
        t vertices outside A u N(A), then the t smallest of those vertices as B

        :param graph: Graph
        :param s: size of the S side
        :param t: size of the T side
        :return: HoleWitness or None
        """
        if s < 0 or t < 0:
            raise InvalidParameter(f'Hole sides must be non-negative, got ({s}, {t})')
        n = graph.n
        if s + t > n:
            return None
        everything = graph.vertex_mask
        for chosen in combinations(range(n), s):
            s_side = mask_of(chosen)
            outside = everything & ~graph.closed_neighborhood(s_side)
            if popcount(outside) >= t:
                return HoleWitness(s_side, mask_of(members(outside)[:t]))
        return None

    @staticmethod
    def has_hole_exhaustive(graph, s, t):
        """
        Raw search over every S and every T of the given sizes for [S, T] = 0.
        Independent of the coverage profile.
        """
        n = graph.n
        if s < 0 or t < 0 or s + t > n:
            return False
        for chosen in combinations(range(n), s):
            s_side = mask_of(chosen)
            reach = 0
            for vertex in chosen:
                reach |= graph.neighbors(vertex)
            rest = [vertex for vertex in range(n) if not s_side >> vertex & 1]
            for other in combinations(rest, t):
                if not reach & mask_of(other):
                    return True
        return False

    @staticmethod
    def alpha_tilde(graph, profile=None):
        """
        Bipartite-hole-number value only: min over s in 1..n of s + f(s)

        :param graph: Graph with n >= 2
        :param profile: CoverageProfile, computed when not given
        :return: int
        """
        if graph.n < 2:
            raise OrderOutOfRange(f'Bipartite-hole-number needs n >= 2, got n = {graph.n}')
        if profile is None:
            profile = InvariantService.coverage_profile(graph)
        return min(s + profile.values[s] for s in range(1, graph.n + 1))

    @staticmethod
    def hole_number(graph):
        """
        Bipartite-hole-number with certificate.
        The smallest k with positive s + t = k + 1 admitting no (s, t)-hole is min_s s + f(s):
        for a fixed s the first t without a hole is f(s) + 1.

        :param graph: Graph with n >= 2
        :return: HoleNumberCertificate
        """
        profile = InvariantService.coverage_profile(graph)
        value = InvariantService.alpha_tilde(graph, profile)

        candidates = [(s, profile.values[s] + 1) for s in range(1, graph.n + 1)
                      if s + profile.values[s] == value]
        blocking_pair = min(candidates, key=lambda pair: (abs(pair[0] - pair[1]), pair[0]))

        full_row = []
        for s in range(value + 1):
            witness = InvariantService.find_hole(graph, s, value - s)
            if witness is None:
                raise CrossCheckFailure(f'No ({s}, {value - s})-hole below the hole number {value}')
            full_row.append(witness)

        if graph.n <= Config.HOLE_CROSS_CHECK_MAX_ORDER and \
                InvariantService.has_hole_exhaustive(graph, *blocking_pair):
            LOGGER.error('Blocking pair %s of %r has a hole', blocking_pair, graph)
            raise CrossCheckFailure(f'Blocking pair {blocking_pair} admits a hole')

        return HoleNumberCertificate(value, blocking_pair, full_row, profile)

    @staticmethod
    def hole_number_dual(graph):
        """
        Largest r such that an (s, r-s)-hole exists for every s in 0..r

        :param graph: Graph with n >= 2
        :return: int
        """
        if graph.n < 2:
            raise OrderOutOfRange(f'Bipartite-hole-number needs n >= 2, got n = {graph.n}')
        profile = InvariantService.coverage_profile(graph)
        r = 0
        while all(profile.admits(s, r + 1 - s) for s in range(r + 2)):
            r += 1
        return r
