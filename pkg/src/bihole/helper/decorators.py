"""
Project decorators
"""

import functools
import sys

import click
from marshmallow import ValidationError

from bihole import LOGGER
from .constants import EXIT_USAGE
from .errors import BiholeException, Graph6ParseError


def command_errors(func):
    """
    Turn library errors raised by a command into a message on stderr and exit code 2

    :param func: click command callback
    :return: function wrapper
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        """
        Command decorator

        :param *args: args
        :param **kwargs: kwargs
        """
        try:
            return func(*args, **kwargs)
        except Graph6ParseError as ex:
            LOGGER.error('Graph6ParseError, offset %s, message: %s', ex.offset, ex.reason)
            click.echo(f'error: {ex}', err=True)
        except ValidationError as ex:
            LOGGER.error('ValidationError, message: %s', ex.messages)
            click.echo(f'error: {ex.messages}', err=True)
        except BiholeException as ex:
            LOGGER.error('%s, message: %s', type(ex).__name__, ex.args)
            click.echo(f'error: {ex}', err=True)
        sys.exit(EXIT_USAGE)
    return wrapper
