"""
Rotation closures of Hamilton paths and a rotation-extension cycle constructor.
"""

from bihole import LOGGER, Config
from bihole.helper.bitset import members
from bihole.helper.enums import SequenceKind
from bihole.helper.errors import CrossCheckFailure, InvalidSequence, RotationPreconditionError
from bihole.models import GiveUp, HamiltonSequence


class RotationService:
    """
    Class with rotation operations on Hamilton paths.
    Positions are 1-based: the path is v1, ..., vn.
    """

    @staticmethod
    def _require_range(name, value, low, high):
        if value is None or not low <= value <= high:
            raise RotationPreconditionError(f'{name} = {value} outside [{low}, {high}]')

    @staticmethod
    def _require_adjacent(path, first, second):
        u, v = path.at(first), path.at(second)
        if not path.graph.has_edge(u, v):
            raise RotationPreconditionError(
                f'v{first} ~ v{second} missing (vertices {u} and {v} are not adjacent)'
            )

    @staticmethod
    def check(path, situation, i, j=None, k=None):
        """
        Raise RotationPreconditionError unless the situation applies at the given positions.
        Ranges: (1) i in [2, n-1]; (2) k in [2, n-1], i in [2, k], j in [k, n-1];
        (3) k in [2, n-1], i in [k, n-1], j in [1, k-1].
        """
        if path.kind is not SequenceKind.Path:
            raise RotationPreconditionError('Rotation closures start from a Hamilton path')
        n = path.n
        require_range = RotationService._require_range
        require_adjacent = RotationService._require_adjacent
        if situation == 1:
            require_range('i', i, 2, n - 1)
            require_adjacent(path, i, 1)
            require_adjacent(path, i - 1, n)
        elif situation == 2:
            require_range('k', k, 2, n - 1)
            require_range('i', i, 2, k)
            require_range('j', j, k, n - 1)
            require_adjacent(path, i, 1)
            require_adjacent(path, j, n)
            require_adjacent(path, i - 1, j + 1)
        elif situation == 3:
            require_range('k', k, 2, n - 1)
            require_range('i', i, k, n - 1)
            require_range('j', j, 1, k - 1)
            require_adjacent(path, i, 1)
            require_adjacent(path, j, n)
            require_adjacent(path, i + 1, j + 1)
        else:
            raise RotationPreconditionError(f'Unknown situation {situation}')

    @staticmethod
    def rotation_close(path, situation, i, j=None, k=None):
        """
        Turn a Hamilton path into a Hamilton cycle using the chords of a closure situation

        (1) v1..v(i-1), vn..vi
        (2) vi..vj, vn..v(j+1), v(i-1)..v1
        (3) v1..vj, vn..v(i+1), v(j+1)..vi

        :param path: HamiltonSequence of kind path
        :param situation: 1, 2 or 3
        :param i, j, k: 1-based positions
        :return: HamiltonSequence of kind cycle
        """
        RotationService.check(path, situation, i, j, k)
        line = path.vertices
        n = path.n
        if situation == 1:
            vertices = line[:i - 1] + line[i - 1:][::-1]
        elif situation == 2:
            vertices = line[i - 1:j] + line[j:][::-1] + line[:i - 1][::-1]
        else:
            vertices = line[:j] + line[i:][::-1] + line[j:i]
        cycle = HamiltonSequence(vertices, SequenceKind.Cycle, path.graph)
        try:
            cycle.validate()
        except InvalidSequence as error:
            LOGGER.error('Closure %s at (%s, %s, %s) on %r broke: %s', situation, i, j, k, path, error)
            raise CrossCheckFailure(str(error)) from error
        if len(cycle.vertices) != n:
            raise CrossCheckFailure('Closure lost vertices')
        return cycle

    @staticmethod
    def applicable_rotations(path):
        """
        Every (situation, i, j, k) that applies, situation 1 first, then by k, i, j

        :param path: HamiltonSequence of kind path
        :return: generator of tuples, j and k None for situation 1
        """
        n = path.n
        graph = path.graph
        line = path.vertices

        def adjacent(first, second):
            return graph.has_edge(line[first - 1], line[second - 1])

        for i in range(2, n):
            if adjacent(i, 1) and adjacent(i - 1, n):
                yield 1, i, None, None
        for k in range(2, n):
            for i in range(2, k + 1):
                if not adjacent(i, 1):
                    continue
                for j in range(k, n):
                    if adjacent(j, n) and adjacent(i - 1, j + 1):
                        yield 2, i, j, k
        for k in range(2, n):
            for i in range(k, n):
                if not adjacent(i, 1):
                    continue
                for j in range(1, k):
                    if adjacent(j, n) and adjacent(i + 1, j + 1):
                        yield 3, i, j, k

    @staticmethod
    def first_applicable(path):
        """
        First entry of applicable_rotations, or None
        """
        return next(RotationService.applicable_rotations(path), None)

    @staticmethod
    def rotate(line, i, graph):
        """
        Posa rotation at the end: with vn ~ vi, v1..vi, vn, v(n-1)..v(i+1)

        :param line: list of vertices
        :param i: 1-based position of the chord's other end, in [1, n-2]
        :param graph: Graph
        :return: list of vertices, new end v(i+1)
        """
        if not 1 <= i <= len(line) - 2 or not graph.has_edge(line[-1], line[i - 1]):
            raise RotationPreconditionError(f'No rotation chord v{len(line)} ~ v{i}')
        return line[:i] + line[i:][::-1]

    @staticmethod
    def _extend(line, graph, visited):
        """
        Greedy extension at the end, preferring neighbours with fewest unvisited neighbours
        """
        degrees = graph.degrees()
        while True:
            fresh = graph.neighbors(line[-1]) & ~visited
            if not fresh:
                return visited
            choice = min(
                members(fresh),
                key=lambda vertex: (bin(graph.neighbors(vertex) & ~visited).count('1'),
                                    degrees[vertex], vertex)
            )
            line.append(choice)
            visited |= 1 << choice

    @staticmethod
    def _close(line, graph):
        path = HamiltonSequence(line, SequenceKind.Path, graph)
        if graph.has_edge(line[0], line[-1]):
            return HamiltonSequence(line, SequenceKind.Cycle, graph)
        found = RotationService.first_applicable(path)
        if found is None:
            return None
        return RotationService.rotation_close(path, *found)

    @staticmethod
    def rotation_extension_construct(graph, budget=None):
        """
        Greedy path extension with Posa rotations at both ends; a spanning path is closed
        by its end edge or by any applicable closure situation. Sound but incomplete.

        :param graph: Graph
        :param budget: maximum number of rotations, Config.ROTATION_FACTOR * n**2 by default
        :return: HamiltonSequence of kind cycle, or GiveUp
        """
        n = graph.n
        if n < 3:
            return GiveUp(0, 'order')
        if budget is None:
            budget = Config.ROTATION_FACTOR * n * n
        degrees = graph.degrees()
        if min(degrees) < 2:
            return GiveUp(0, 'vertex of degree below two')

        start = max(range(n), key=lambda vertex: (degrees[vertex], -vertex))
        line = [start]
        visited = RotationService._extend(line, graph, 1 << start)
        line.reverse()
        visited = RotationService._extend(line, graph, visited)
        seen = {tuple(line)}
        rotations = 0

        while True:
            if len(line) == n:
                cycle = RotationService._close(line, graph)
                if cycle is not None:
                    LOGGER.debug('Rotation-extension closed a cycle after %s rotations', rotations)
                    return cycle
            if rotations >= budget:
                LOGGER.debug('Rotation-extension gave up on %r after %s rotations', graph, rotations)
                return GiveUp(rotations, 'budget exhausted')

            rotated = RotationService._next_rotation(line, graph, visited, seen)
            if rotated is None:
                line.reverse()
                rotated = RotationService._next_rotation(line, graph, visited, seen)
            if rotated is None:
                return GiveUp(rotations, 'no unexplored rotation')
            rotations += 1
            line = rotated
            seen.add(tuple(line))
            visited = RotationService._extend(line, graph, visited)
            if len(line) < n:
                line.reverse()
                visited = RotationService._extend(line, graph, visited)
            seen.add(tuple(line))

    @staticmethod
    def _next_rotation(line, graph, visited, seen):
        """
        Unexplored rotation at the end whose new end has the most unvisited neighbours
        """
        best = None
        best_key = None
        end = line[-1]
        for position in range(1, len(line) - 1):
            if not graph.has_edge(end, line[position - 1]):
                continue
            candidate = RotationService.rotate(line, position, graph)
            if tuple(candidate) in seen:
                continue
            new_end = candidate[-1]
            key = (bin(graph.neighbors(new_end) & ~visited).count('1'),
                   graph.has_edge(new_end, candidate[0]), -position)
            if best_key is None or key > best_key:
                best, best_key = candidate, key
        return best
