"""
Bipartite hole models
"""
from bihole.helper.bitset import members, popcount


class HoleWitness:
    """
    A concrete (s, t)-bipartite-hole: disjoint vertex sets S and T with [S, T] empty

    :param s_side - int | bitmask S
    :param t_side - int | bitmask T
    """

    __slots__ = ('s_side', 't_side')

    def __init__(self, s_side, t_side):
        self.s_side = s_side
        self.t_side = t_side

    @property
    def s(self):
        """
        |S|
        """
        return popcount(self.s_side)

    @property
    def t(self):
        """
        |T|
        """
        return popcount(self.t_side)

    @property
    def s_vertices(self):
        """
        Members of S, ascending
        """
        return members(self.s_side)

    @property
    def t_vertices(self):
        """
        Members of T, ascending
        """
        return members(self.t_side)

    def validate(self, graph):
        """
        Check the witness against the graph by a direct edge scan

        :param graph: Graph
        :return: bool
        """
        everything = graph.vertex_mask
        if (self.s_side | self.t_side) & ~everything:
            return False
        if self.s_side & self.t_side:
            return False
        return not graph.edges_between(self.s_side, self.t_side)

    def __eq__(self, other):
        if not isinstance(other, HoleWitness):
            return NotImplemented
        return (self.s_side, self.t_side) == (other.s_side, other.t_side)

    def __hash__(self):
        return hash((self.s_side, self.t_side))

    def __repr__(self):
        return f'<HoleWitness S {self.s_vertices}, T {self.t_vertices}>'


class CoverageProfile:
    """
    f(s) for s in 0..n: the largest number of vertices left outside A and N(A) over |A| = s.
    An (s, t)-hole exists iff s <= n and t <= f(s).

    :param values - tuple of int | values[s] = f(s)
    """

    __slots__ = ('values',)

    def __init__(self, values):
        self.values = tuple(values)

    @property
    def n(self):
        """
        Order of the profiled graph
        """
        return len(self.values) - 1

    def f(self, size):
        """
        f(size), or None when size is above n
        """
        if 0 <= size < len(self.values):
            return self.values[size]
        return None

    def admits(self, s, t):
        """
        Whether an (s, t)-hole exists
        """
        if s < 0 or t < 0 or s > self.n:
            return False
        return t <= self.values[s]

    def __eq__(self, other):
        if not isinstance(other, CoverageProfile):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return f'<CoverageProfile {list(self.values)}>'


class HoleNumberCertificate:
    """
    The bipartite-hole-number with evidence

    :param value - int | the bipartite-hole-number
    :param blocking_pair - (int, int) | positive (s, t), s + t = value + 1, admitting no hole
    :param full_row - list of HoleWitness | one witness per split s + t = value, s ascending
    :param profile - CoverageProfile | the profile the value was derived from
    """

    __slots__ = ('value', 'blocking_pair', 'full_row', 'profile')

    def __init__(self, value, blocking_pair, full_row, profile):
        self.value = value
        self.blocking_pair = blocking_pair
        self.full_row = full_row
        self.profile = profile

    def validate(self, graph):
        """
        Every witness in the row validates and has the split it claims
        """
        if len(self.full_row) != self.value + 1:
            return False
        for s, witness in enumerate(self.full_row):
            if witness.s != s or witness.t != self.value - s or not witness.validate(graph):
                return False
        s, t = self.blocking_pair
        return s >= 1 and t >= 1 and s + t == self.value + 1

    def __repr__(self):
        return f'<HoleNumberCertificate value {self.value}, blocking {self.blocking_pair}>'
