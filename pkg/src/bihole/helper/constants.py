"""
Constants module
"""

TOOL_VERSION = '1.0.0'
SCHEMA_VERSION = 1

# one adjacency row per machine word
MAX_ORDER = 64
MAX_ENUMERATE_ORDER = 7

GRAPH6_HEADER = '>>graph6<<'
GRAPH6_MIN_BYTE = 63
GRAPH6_MAX_BYTE = 126
GRAPH6_LONG_MARKER = 126

PRNG_ALGORITHM = 'numpy.random.Generator(PCG64)/v1'

INFINITY = float('inf')
INFINITY_TEXT = 'infinity'

SHARPNESS2_ASSERTED_FROM = 6

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
