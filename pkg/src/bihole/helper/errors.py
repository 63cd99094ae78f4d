"""
Custom exceptions
"""


class BiholeException(Exception):
    """
    Base custom exception
    """


class InvalidGraph(BiholeException):
    """
    Base invalid graph exception
    """


class Graph6ParseError(InvalidGraph):
    """
    graph6 line could not be decoded

    :param message: what went wrong
    :param offset: 0-based byte offset inside the line
    """

    def __init__(self, message, offset):
        super().__init__(f'{message} (byte offset {offset})')
        self.reason = message
        self.offset = offset


class GraphTooLarge(InvalidGraph):
    """
    Graph order above the supported bitset width
    """


class InvalidSequence(InvalidGraph):
    """
    Vertex sequence is not a Hamilton path or cycle of its graph
    """


class InvalidParameter(BiholeException):
    """
    Base invalid parameter exception
    """


class FamilyConstraintViolation(InvalidParameter):
    """
    Graph family parameters violate the family constraint
    """


class InvalidVertex(InvalidParameter):
    """
    Vertex id out of range or repeated where distinct vertices are needed
    """


class OrderOutOfRange(InvalidParameter):
    """
    Graph order below the minimum an operation or theorem is stated for
    """


class EnumerationTooLarge(InvalidParameter):
    """
    Exhaustive labeled enumeration requested above the supported order
    """


class RotationPreconditionError(BiholeException):
    """
    Rotation closure requested where its adjacency pattern does not hold
    """


class CrossCheckFailure(BiholeException):
    """
    Two independent computations of the same value disagree
    """
