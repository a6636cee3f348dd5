import logging

import click

from reductions.cesm3 import assignment_to_matching, sat_to_cesm3
from reductions.completion import complete_profile
from reductions.pesm import is_to_pesm
from reductions.switch_gadget import BoundaryOrder, standalone_switch
from reductions.two_two_sat import r3sat_to_223sat
from utils.decorators import handle_errors
from utils.formats import (
    parse_dimacs, parse_graph, read_text, serialize_dimacs, serialize_matching, serialize_profile,
    write_text,
)
from utils.generators import make_rng, random_profile

logger = logging.getLogger(__name__)

output_option = click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
                             help='Write the profile here instead of stdout.')
normalize_option = click.option('--normalize', is_flag=True,
                                help='Rewrite the formula into (2,2)-3SAT first.')


def _emit(text, output):
    if output:
        write_text(output, text)
    else:
        click.echo(text, nl=False)


def _load_formula(cnf_path, normalize, formula_out):
    formula = parse_dimacs(read_text(cnf_path))
    if normalize:
        formula = r3sat_to_223sat(formula)
    if formula_out:
        write_text(formula_out, serialize_dimacs(formula))
    return formula


@click.group('gen')
def gen_group():
    """Generate instances: reductions, switch gadget, random profiles"""


@gen_group.command('sat3')
@click.argument('cnf_path', type=click.Path(exists=True, dir_okay=False))
@normalize_option
@output_option
@click.option('--formula-out', type=click.Path(dir_okay=False), default=None,
              help='Write the (normalized) formula as DIMACS.')
@click.option('--witness', type=click.Path(dir_okay=False), default=None,
              help='Write a perfect coalitional exchange-stable matching when the formula is satisfiable.')
@handle_errors
def gen_sat3(cnf_path, normalize, output, formula_out, witness):
    """Lists of length three from a (2,2)-3SAT formula"""
    formula = _load_formula(cnf_path, normalize, formula_out)
    profile, gm = sat_to_cesm3(formula)
    _emit(serialize_profile(profile), output)
    if witness:
        sigma = formula.satisfying_assignment()
        if sigma is None:
            click.echo('formula is unsatisfiable; no witness written', err=True)
        else:
            write_text(witness, serialize_matching(profile, assignment_to_matching(profile, gm, sigma)))


@gen_group.command('complete')
@click.argument('cnf_path', type=click.Path(exists=True, dir_okay=False))
@normalize_option
@output_option
@handle_errors
def gen_complete(cnf_path, normalize, output):
    """Complete bipartite preferences from a (2,2)-3SAT formula"""
    formula = _load_formula(cnf_path, normalize, None)
    profile, gm = sat_to_cesm3(formula)
    _emit(serialize_profile(complete_profile(profile, gm)), output)


@gen_group.command('pesm')
@click.argument('graph_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--h', 'size', type=int, required=True, help='Independent set size.')
@output_option
@click.option('--matching-out', type=click.Path(dir_okay=False), default=None,
              help='Write the initial matching here.')
@handle_errors
def gen_pesm(graph_path, size, output, matching_out):
    """Swap-reachability instance from an independent-set instance"""
    graph = parse_graph(read_text(graph_path))
    profile, m0, budget = is_to_pesm(graph, size)
    _emit(f'# budget: {budget}\n' + serialize_profile(profile), output)
    if matching_out:
        write_text(matching_out, serialize_matching(profile, m0))


@gen_group.command('switch')
@click.option('--order', type=click.Choice([o.value for o in BoundaryOrder]),
              default=BoundaryOrder.GADGET_FIRST.value, show_default=True)
@output_option
def gen_switch(order, output):
    """Standalone switch gadget with its four boundary agents"""
    profile, _, _ = standalone_switch(order)
    _emit(serialize_profile(profile), output)


@gen_group.command('random')
@click.option('--agents', type=click.IntRange(min=2), required=True)
@click.option('--max-length', type=click.IntRange(min=1), default=3, show_default=True)
@click.option('--bipartite', is_flag=True)
@click.option('--perfect-seed', is_flag=True, help='Start from a random perfect matching.')
@click.option('--seed', type=int, default=None, help='Overrides EXSTAB_SEED.')
@output_option
@handle_errors
def gen_random(agents, max_length, bipartite, perfect_seed, seed, output):
    """Random strict profile with bounded list length"""
    if bipartite and agents % 2:
        raise click.UsageError('--bipartite needs an even number of agents')
    profile = random_profile(make_rng(seed), agents, max_length, bipartite, perfect_seed=perfect_seed)
    logger.info('random profile: %d agents, d=%d', profile.n, profile.max_length)
    _emit(serialize_profile(profile), output)
