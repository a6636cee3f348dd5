import json
import logging

import click

from config import Config
from solvers.swaps import reach_es
from utils.decorators import exit_with, handle_errors
from utils.formats import load_matching, load_profile, serialize_matching

logger = logging.getLogger(__name__)


@click.command('reach')
@click.argument('profile_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--matching', 'matching_path', required=True,
              type=click.Path(exists=True, dir_okay=False), help='Initial matching.')
@click.option('--k', 'budget', type=click.IntRange(min=0), required=True, help='Maximum number of swaps.')
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable report.')
@handle_errors
def reach_command(profile_path, matching_path, budget, as_json):
    """Search for at most k swaps leading to an exchange-stable matching"""
    profile = load_profile(profile_path)
    m0 = load_matching(profile, matching_path)
    steps = reach_es(profile, m0, budget)
    final = steps[-1].after if steps else m0

    if as_json:
        click.echo(json.dumps({
            'schema': Config.JSON_SCHEMA,
            'budget': budget,
            'found': steps is not None,
            'swaps': None if steps is None else [[profile.name(a) for a in step.pair] for step in steps],
            'matching': None if steps is None else [
                [profile.name(a), profile.name(b)] for a, b in final.canonical()
            ],
        }, indent=2))
    elif steps is None:
        click.echo('NONE')
    else:
        for step in steps:
            x, y = step.pair
            click.echo(f'swap {profile.name(x)} {profile.name(y)}')
        click.echo(serialize_matching(profile, final), nl=False)

    if steps is None:
        logger.info('no exchange-stable matching within %d swaps', budget)
    exit_with(Config.EXIT_OK if steps is not None else Config.EXIT_NO_SOLUTION)
