"""
Exhaustive enumeration of labeled graphs.
"""

from bihole.helper.constants import MAX_ENUMERATE_ORDER
from bihole.helper.errors import EnumerationTooLarge, InvalidParameter, OrderOutOfRange
from bihole.models import Graph
from bihole.services.invariant import InvariantService


def _connected(graph):
    return graph.is_connected()


def _two_connected(graph):
    return InvariantService.is_k_connected(graph, 2)


def _ore_hole(graph):
    if graph.n < 3 or not InvariantService.is_k_connected(graph, 2):
        return False
    return InvariantService.sigma2(graph) >= 2 * InvariantService.alpha_tilde(graph)


FILTERS = {
    'connected': _connected,
    'two_connected': _two_connected,
    'ore_hole': _ore_hole,
}


class EnumerationService:
    """
    Class with labeled graph enumeration.
    Edge k of a mask is the k-th pair in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
    """

    @staticmethod
    def edge_order(n):
        """
        Vertex pairs in graph6 order

        :param n: order
        :return: list of (i, j) with i < j
        """
        return [(i, j) for j in range(1, n) for i in range(j)]

    @staticmethod
    def _check_order(n):
        if n < 1:
            raise OrderOutOfRange(f'Enumeration needs n >= 1, got n = {n}')
        if n > MAX_ENUMERATE_ORDER:
            raise EnumerationTooLarge(
                f'Labeled enumeration stops at n = {MAX_ENUMERATE_ORDER}, got n = {n}; '
                f'pass a graph6 corpus with --corpus instead'
            )

    @staticmethod
    def edge_masks(n):
        """
        Every edge mask of order n, ascending
        """
        EnumerationService._check_order(n)
        return range(1 << (n * (n - 1) // 2))

    @staticmethod
    def graph_from_mask(n, mask, order=None):
        """
        :param n: order
        :param mask: edge mask over edge_order(n)
        :param order: precomputed edge_order(n)
        :return: Graph
        """
        order = order or EnumerationService.edge_order(n)
        rows = [0] * n
        index = 0
        while mask:
            if mask & 1:
                i, j = order[index]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            mask >>= 1
            index += 1
        return Graph(n, rows)

    @staticmethod
    def resolve_filter(graph_filter):
        """
        Named filter or callable to a predicate, None for no filter
        """
        if graph_filter is None or callable(graph_filter):
            return graph_filter
        try:
            return FILTERS[graph_filter]
        except KeyError:
            raise InvalidParameter(
                f'Unknown filter {graph_filter!r}, expected one of {sorted(FILTERS)}'
            ) from None

    @staticmethod
    def enumerate_masks(n, masks, graph_filter=None):
        """
        Graphs for a range of edge masks

        :return: iterator of (mask, Graph)
        """
        predicate = EnumerationService.resolve_filter(graph_filter)
        order = EnumerationService.edge_order(n)
        for mask in masks:
            graph = EnumerationService.graph_from_mask(n, mask, order)
            if predicate is None or predicate(graph):
                yield mask, graph

    @staticmethod
    def enumerate_labeled(n, graph_filter=None):
        """
        Every labeled simple graph on n vertices passing the filter, exactly once,
        in ascending edge-mask order

        :param n: order in 1..MAX_ENUMERATE_ORDER
        :param graph_filter: None, a predicate on Graph or a name from FILTERS
        :return: iterator of Graph
        """
        masks = EnumerationService.edge_masks(n)
        for _, graph in EnumerationService.enumerate_masks(n, masks, graph_filter):
            yield graph
