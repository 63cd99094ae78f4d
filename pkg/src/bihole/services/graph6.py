"""
graph6 codec and corpus reading.
"""

import networkx as nx

from bihole import LOGGER
from bihole.helper.constants import (
    GRAPH6_HEADER,
    GRAPH6_LONG_MARKER,
    GRAPH6_MAX_BYTE,
    GRAPH6_MIN_BYTE,
    MAX_ORDER
)
from bihole.helper.errors import Graph6ParseError, GraphTooLarge
from bihole.models import Graph


class Graph6Service:
    """
    Class with graph6 operations

    networkx does the bit packing; the checks here run first so that a
    malformed line is reported with the byte offset of the problem.
    """

    @staticmethod
    def _byte(data, offset):
        value = data[offset]
        if not GRAPH6_MIN_BYTE <= value <= GRAPH6_MAX_BYTE:
            raise Graph6ParseError(f'Byte {bytes([value])!r} out of range 63..126', offset)
        return value - GRAPH6_MIN_BYTE

    @staticmethod
    def _read_order(data, start):
        """
        Decode N(n)

        :param data: the line as bytes
        :param start: offset of the length field
        :return: (n, offset of the first data byte)
        """
        if start >= len(data):
            raise Graph6ParseError('Missing length field', start)
        first = Graph6Service._byte(data, start)
        if first + GRAPH6_MIN_BYTE != GRAPH6_LONG_MARKER:
            return first, start + 1
        if start + 1 < len(data) and data[start + 1] == GRAPH6_LONG_MARKER:
            raise GraphTooLarge(f'Order above {MAX_ORDER} (36-bit length field at byte offset {start})')
        if start + 4 > len(data):
            raise Graph6ParseError('Malformed length field: expected three bytes after 126', start)
        n = 0
        for offset in range(start + 1, start + 4):
            n = (n << 6) | Graph6Service._byte(data, offset)
        if n < GRAPH6_LONG_MARKER - GRAPH6_MIN_BYTE:
            raise Graph6ParseError(f'Malformed length field: order {n} needs the short form', start)
        return n, start + 4

    @staticmethod
    def _to_bytes(text):
        if isinstance(text, str):
            # non-ASCII characters become bytes above 126 and fail the range check
            text = text.encode('utf-8')
        return bytes(text).rstrip(b'\r\n')

    @staticmethod
    def validate(text):
        """
        Check one graph6 line without decoding the adjacency bits

        :param text: str | bytes
        :return: (n, the line as bytes without header and line ending)
        """
        data = Graph6Service._to_bytes(text)
        header = GRAPH6_HEADER.encode('ascii')
        start = len(header) if data.startswith(header) else 0

        n, offset = Graph6Service._read_order(data, start)
        if n > MAX_ORDER:
            raise GraphTooLarge(f'Order {n} is above the supported maximum {MAX_ORDER}')

        bit_count = n * (n - 1) // 2
        byte_count = (bit_count + 5) // 6
        if len(data) - offset < byte_count:
            raise Graph6ParseError(
                f'Truncated adjacency data: expected {byte_count} bytes, got {len(data) - offset}',
                len(data)
            )
        if len(data) - offset > byte_count:
            raise Graph6ParseError('Trailing garbage after adjacency data', offset + byte_count)

        last = 0
        for position in range(offset, offset + byte_count):
            last = Graph6Service._byte(data, position)
        padding = byte_count * 6 - bit_count
        if last & ((1 << padding) - 1):
            raise Graph6ParseError('Non-zero padding bits', offset + byte_count - 1)
        return n, data[start:]

    @staticmethod
    def from_networkx(nx_graph):
        """
        Bitset graph from a networkx graph labelled 0..n-1
        """
        return Graph.from_edges(nx_graph.number_of_nodes(), nx_graph.edges())

    @staticmethod
    def to_networkx(graph):
        """
        networkx graph with the same labelling
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(graph.n))
        nx_graph.add_edges_from(graph.edges())
        return nx_graph

    @staticmethod
    def from_graph6(text):
        """
        Decode one graph6 line

        :param text: str | bytes | graph6 line, optional '>>graph6<<' header and line ending
        :return: Graph
        """
        n, data = Graph6Service.validate(text)
        graph = Graph6Service.from_networkx(nx.from_graph6_bytes(data))
        if graph.n != n:
            raise Graph6ParseError(f'Decoded order {graph.n}, length field says {n}', 0)
        return graph

    @staticmethod
    def to_graph6(graph):
        """
        Canonical graph6 encoding without header

        :param graph: Graph
        :return: str
        """
        encoded = nx.to_graph6_bytes(Graph6Service.to_networkx(graph), header=False)
        return encoded.rstrip(b'\n').decode('ascii')

    @staticmethod
    def read_corpus(lines):
        """
        Decode a corpus, one graph per line; blank lines are skipped

        :param lines: iterable of str or bytes
        :return: iterator of (line_number, Graph or Graph6ParseError/GraphTooLarge)
        """
        for line_number, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                yield line_number, Graph6Service.from_graph6(line)
            except (Graph6ParseError, GraphTooLarge) as error:
                LOGGER.warning('Malformed corpus line %s: %s', line_number, error)
                yield line_number, error
