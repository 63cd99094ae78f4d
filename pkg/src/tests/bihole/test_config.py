"""
Tests for Config
"""

import importlib
import os

import mock
import pytest

from bihole import config


@pytest.mark.parametrize("name, attribute, default", [
    ('BIHOLE_WORKERS', 'WORKERS', 1),
    ('BIHOLE_DP_MAX_ORDER', 'DP_MAX_ORDER', 20),
    ('BIHOLE_PROFILE_DP_MAX_ORDER', 'PROFILE_DP_MAX_ORDER', 20),
    ('BIHOLE_HOLE_CROSS_CHECK_MAX_ORDER', 'HOLE_CROSS_CHECK_MAX_ORDER', 10),
])
def test_config_reads_environment(name, attribute, default):
    """
    Test Config
    Integer tunables come from BIHOLE_* variables, empty or missing means the default
    """
    try:
        with mock.patch.dict(os.environ, {name: '12'}):
            assert getattr(importlib.reload(config).Config, attribute) == 12
        with mock.patch.dict(os.environ, {name: ''}):
            assert getattr(importlib.reload(config).Config, attribute) == default
    finally:
        importlib.reload(config)
