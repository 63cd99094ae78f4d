"""
bihole command group
"""

import click

from bihole.helper.constants import TOOL_VERSION
from .graph import generate, hamilton, holes, invariants
from .verify import audit, verify


@click.group()
@click.version_option(TOOL_VERSION, prog_name='bihole')
def cli():
    """
    Bipartite holes and hamiltonicity: invariants, exact solvers and theorem sweeps
    """


for command in (invariants, holes, hamilton, generate, verify, audit):
    cli.add_command(command)
