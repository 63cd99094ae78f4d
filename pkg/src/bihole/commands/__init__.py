"""
Init commands
"""
from .cli import cli
