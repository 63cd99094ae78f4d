"""
Options and output shared by every command
"""

import functools
import json
import logging

import click

from bihole import LOGGER, VERIFY_LOGGER, Config
from bihole.helper.constants import SCHEMA_VERSION, TOOL_VERSION
from bihole.helper.enums import OutputFormat
from bihole.schemas import RunConfigSchema
from bihole.services import Graph6Service


def common_options(func):
    """
    --format, --seed, --workers, --output and --verbose
    """
    @click.option('--format', 'output_format', default=None,
                  type=click.Choice([item.value for item in OutputFormat]),
                  help='Report format.')
    @click.option('--seed', type=int, default=None,
                  help='Seed recorded in every report and used by random families.')
    @click.option('--workers', type=int, default=None, help='Worker processes for sweeps.')
    @click.option('--output', type=click.Path(dir_okay=False, writable=True), default=None,
                  help='Write the report to a file instead of stdout.')
    @click.option('--verbose', is_flag=True, help='Debug logging on stderr.')
    @functools.wraps(func)
    def wrapper(*args, verbose=False, **kwargs):
        if verbose:
            LOGGER.setLevel(logging.DEBUG)
            VERIFY_LOGGER.setLevel(logging.DEBUG)
        return func(*args, **kwargs)
    return wrapper


def load_config(command, output_format, seed, workers, default_format=OutputFormat.Json, **options):
    """
    Validate command options with RunConfigSchema

    :return: dict
    """
    data = {
        'command': command,
        'format': output_format or default_format.value,
        'seed': Config.SEED if seed is None else seed,
        'workers': Config.WORKERS if workers is None else workers,
    }
    data.update({key: value for key, value in options.items() if value is not None})
    return RunConfigSchema().load(data)


def read_graph(text):
    """
    Graph from an inline graph6 string, or from the first line of stdin for '-'
    """
    if text == '-':
        text = click.get_text_stream('stdin').readline()
    return Graph6Service.from_graph6(text.strip())


def envelope(config, body):
    """
    Report body with the fields every JSON report carries
    """
    report = dict(body)
    report.update({
        'schema_version': SCHEMA_VERSION,
        'tool_version': TOOL_VERSION,
        'seed': config['seed'],
        'config': RunConfigSchema.echo(config),
    })
    return report


def emit(config, output, body, text):
    """
    Write the report as sorted JSON or as text lines

    :param config: loaded run config
    :param output: path or None for stdout
    :param body: dict of the JSON report
    :param text: list of lines for text format
    """
    if config['format'] == OutputFormat.Json.value:
        content = json.dumps(envelope(config, body), sort_keys=True, indent=2)
    else:
        content = '\n'.join(text)
    if output:
        with click.open_file(output, 'w') as handle:
            handle.write(content + '\n')
    else:
        click.echo(content)
