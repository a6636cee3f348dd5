from functools import wraps
import logging

import click

from config import Config
from utils.errors import (
    MatchingError, PreconditionError, ProfileError, ProfileFormatError, ReductionError, SolverError,
)

logger = logging.getLogger(__name__)


def handle_errors(f):
    """Decorator mapping package errors of a command to diagnostics and exit codes"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except (ProfileFormatError, ProfileError, MatchingError) as error:
            click.echo(f'error: {error}', err=True)
            ctx.exit(Config.EXIT_DATA)
        except (PreconditionError, ReductionError) as error:
            click.echo(f'error: {error}', err=True)
            ctx.exit(Config.EXIT_USAGE)
        except SolverError as error:
            logger.error('solver verification failed: %s', error)
            click.echo(f'internal error: {error}', err=True)
            ctx.exit(Config.EXIT_SOFTWARE)
    return decorated_function


def exit_with(code):
    """Leave the current command with an exit code"""
    click.get_current_context().exit(code)


def current_config():
    """Config class selected by create_app, or the base Config outside a command"""
    ctx = click.get_current_context(silent=True)
    if ctx is None or ctx.find_root().obj is None:
        return Config
    return ctx.find_root().obj
