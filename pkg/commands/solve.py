import json
import logging
import time

import click

from config import Config
from models.matching import Criterion
from models.profile import acceptability_graph
from solvers.d2 import solve_d2
from solvers.fpt import FptReport, solve_d3_fpt
from solvers.hourglass import collect_hourglasses
from solvers.oracle import solve_brute
from solvers.sat_oracle import solve_sat
from utils.decorators import current_config, exit_with, handle_errors
from utils.formats import load_profile, serialize_matching, write_text

logger = logging.getLogger(__name__)

ALGORITHMS = ('brute', 'd2', 'fpt', 'sat')


def check_combination(algo, criterion, perfect, profile):
    """Raise click.UsageError for algorithm/criterion pairs without a solver"""
    limit = current_config().ORACLE_MAX_AGENTS
    if algo == 'fpt' and (criterion is not Criterion.ES or not perfect):
        raise click.UsageError('--algo fpt needs --criterion es and --perfect')
    if algo == 'd2' and not perfect:
        raise click.UsageError('--algo d2 needs --perfect')
    if algo == 'brute' and profile.n > limit:
        raise click.UsageError(
            f'--algo brute accepts at most {limit} agents, got {profile.n}; try --algo sat'
        )


def _hourglass_summary(profile):
    if profile.max_length > 3:
        return None, None
    tall, clusters = collect_hourglasses(acceptability_graph(profile))
    return len(tall) + sum(len(c.hourglasses) for c in clusters), len(clusters)


@click.command('solve')
@click.argument('profile_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--algo', type=click.Choice(ALGORITHMS), default='brute', show_default=True)
@click.option('--criterion', type=click.Choice([c.value for c in Criterion]), default='es',
              show_default=True)
@click.option('--perfect', is_flag=True, help='Require every agent to be matched.')
@click.option('--threads', type=click.IntRange(min=1), default=None,
              help='Worker threads for --algo fpt (default EXSTAB_THREADS or 1).')
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
              help='Write the matching here instead of stdout.')
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable report.')
@handle_errors
def solve_command(profile_path, algo, criterion, perfect, threads, output, as_json):
    """Find a matching meeting the criterion, or print NONE"""
    criterion = Criterion(criterion)
    profile = load_profile(profile_path)
    check_combination(algo, criterion, perfect, profile)

    report = FptReport()
    started = time.perf_counter()
    if algo == 'brute':
        matching = solve_brute(profile, criterion, perfect)
    elif algo == 'd2':
        matching = solve_d2(profile, criterion)
    elif algo == 'fpt':
        matching = solve_d3_fpt(profile, threads or current_config().THREADS, report)
    else:
        matching = solve_sat(profile, criterion, perfect, current_config().SAT_SOLVER)
    elapsed = time.perf_counter() - started
    logger.info('%s/%s finished in %.3fs, found=%s', algo, criterion.value, elapsed, matching is not None)

    if matching is not None and output:
        write_text(output, serialize_matching(profile, matching))

    if as_json:
        if algo == 'fpt':
            hourglasses, clusters = report.hourglasses, report.clusters
        else:
            hourglasses, clusters = _hourglass_summary(profile)
        payload = {
            'schema': Config.JSON_SCHEMA,
            'algo': algo,
            'criterion': criterion.value,
            'perfect': perfect,
            'found': matching is not None,
            'matching': None if matching is None else [
                [profile.name(a), profile.name(b)] for a, b in matching.canonical()
            ],
            'hourglasses': hourglasses,
            'clusters': clusters,
            'elapsed': round(elapsed, 6),
        }
        if algo == 'fpt':
            payload['fpt'] = report.to_dict()
        click.echo(json.dumps(payload, indent=2))
    elif matching is None:
        click.echo('NONE')
    elif not output:
        click.echo(serialize_matching(profile, matching), nl=False)

    exit_with(Config.EXIT_OK if matching is not None else Config.EXIT_NO_SOLUTION)
