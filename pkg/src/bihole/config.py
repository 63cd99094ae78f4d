"""
    Configuration module for bihole.
"""

import os

BASEDIR = os.path.dirname(os.path.abspath(os.path.dirname(__file__)))


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


class Config:
    """
        A class holding the tunables of the library and the command line tool.
        Every value can be overridden from the environment.
    """
    LOG_DIR = os.environ.get('BIHOLE_LOG_DIR', os.path.join(BASEDIR, 'logs'))
    LOG_LEVEL = os.environ.get('BIHOLE_LOG_LEVEL', 'WARNING')

    # corpus sweeps
    WORKERS = _env_int('BIHOLE_WORKERS', 1)
    SEED = _env_int('BIHOLE_SEED', 0)
    CHUNK_SIZE = _env_int('BIHOLE_CHUNK_SIZE', 4096)

    # rotation-extension budget is ROTATION_FACTOR * n**2 rotations
    ROTATION_FACTOR = _env_int('BIHOLE_ROTATION_FACTOR', 50)
    # theorem checks try FAST_PATH_ROTATION_FACTOR * n rotations before the exact search
    FAST_PATH_ROTATION_FACTOR = _env_int('BIHOLE_FAST_PATH_ROTATION_FACTOR', 2)

    # blocking pairs are re-checked by raw subset search up to this order
    HOLE_CROSS_CHECK_MAX_ORDER = _env_int('BIHOLE_HOLE_CROSS_CHECK_MAX_ORDER', 10)

    # subset DP tables grow as 2**n
    DP_MAX_ORDER = _env_int('BIHOLE_DP_MAX_ORDER', 20)
    # coverage profiles use the subset DP up to this order, combinations above
    PROFILE_DP_MAX_ORDER = _env_int('BIHOLE_PROFILE_DP_MAX_ORDER', 20)
