"""
Vertex sets as int bitmasks over 0..n-1
"""


def mask_of(vertices):
    """
    Build a bitmask from an iterable of vertex ids

    :param vertices: iterable of ints
    :return: int
    """
    mask = 0
    for vertex in vertices:
        mask |= 1 << vertex
    return mask


def members(mask):
    """
    Vertex ids of a bitmask in ascending order

    :param mask: int
    :return: list of ints
    """
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


def popcount(mask):
    """
    Number of members of a bitmask
    """
    return bin(mask).count('1')


def full_mask(n):
    """
    Bitmask of all vertices 0..n-1
    """
    return (1 << n) - 1


def lowest(mask):
    """
    Smallest member of a non-empty bitmask
    """
    return (mask & -mask).bit_length() - 1
