import json
import logging

import click

from config import Config
from models.matching import Criterion
from solvers.stability import find_ebc, is_maximal, is_perfect, iter_ebps
from utils.decorators import exit_with, handle_errors
from utils.formats import format_agents, load_matching, load_profile

logger = logging.getLogger(__name__)


def _yes(flag):
    return 'yes' if flag else 'no'


@click.command('verify')
@click.argument('profile_path', type=click.Path(exists=True, dir_okay=False))
@click.argument('matching_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--criterion', type=click.Choice([c.value for c in Criterion]), default='es',
              show_default=True, help='Stability notion deciding the exit code.')
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable report.')
@handle_errors
def verify_command(profile_path, matching_path, criterion, as_json):
    """Check a matching: perfect, maximal, exchange-stable, coalitional"""
    criterion = Criterion(criterion)
    profile = load_profile(profile_path)
    matching = load_matching(profile, matching_path)

    ebps = iter_ebps(profile, matching)
    cycle = find_ebc(profile, matching)
    verdicts = {
        'perfect': is_perfect(profile, matching),
        'maximal': is_maximal(profile, matching),
        'exchange_stable': not ebps,
        'coalitional': cycle is None,
    }
    holds = verdicts['coalitional'] if criterion is Criterion.CES else verdicts['exchange_stable']
    logger.info('verify %s: %s', criterion.value, holds)

    if as_json:
        click.echo(json.dumps({
            'schema': Config.JSON_SCHEMA,
            'criterion': criterion.value,
            'holds': holds,
            **verdicts,
            'ebps': [[profile.name(a) for a in pair] for pair in ebps],
            'ebc': None if cycle is None else [profile.name(a) for a in cycle],
        }, indent=2))
    else:
        click.echo(f'perfect: {_yes(verdicts["perfect"])}')
        click.echo(f'maximal: {_yes(verdicts["maximal"])}')
        click.echo(f'exchange-stable: {_yes(verdicts["exchange_stable"])}')
        click.echo(f'coalitional exchange-stable: {_yes(verdicts["coalitional"])}')
        if criterion is Criterion.ES and ebps:
            click.echo('ebp: ' + ' '.join(format_agents(profile, pair) for pair in ebps))
        if criterion is Criterion.CES and cycle is not None:
            click.echo('ebc: ' + format_agents(profile, cycle))
    exit_with(Config.EXIT_OK if holds else Config.EXIT_FAILED)
