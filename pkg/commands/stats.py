from collections import Counter
import json

import click
import networkx as nx

from config import Config
from models.profile import acceptability_graph
from solvers.hourglass import collect_hourglasses
from utils.decorators import handle_errors
from utils.formats import load_profile


def component_census(graph):
    """Counter of component shapes: path, cycle, tree, other"""
    census = Counter()
    for component in nx.connected_components(graph):
        sub = graph.subgraph(component)
        max_degree = max(d for _, d in sub.degree())
        edges = sub.number_of_edges()
        if edges == len(component) - 1:
            census['path' if max_degree <= 2 else 'tree'] += 1
        elif edges == len(component) and max_degree == 2:
            census['cycle'] += 1
        else:
            census['other'] += 1
    return census


def profile_stats(profile):
    graph = acceptability_graph(profile)
    census = component_census(graph)
    stats = {
        'agents': profile.n,
        'd': profile.max_length,
        'bipartite': profile.is_bipartite,
        'complete': profile.is_complete,
        'components': {shape: census[shape] for shape in ('path', 'cycle', 'tree', 'other')},
        'hourglasses': None,
        'heights': None,
        'clusters': None,
    }
    if profile.max_length <= 3:
        tall, clusters = collect_hourglasses(graph)
        heights = [h.height for h in tall] + [h.height for c in clusters for h in c.hourglasses]
        stats.update(hourglasses=len(heights), heights=sorted(heights), clusters=len(clusters))
    return stats


@click.command('stats')
@click.argument('profile_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable report.')
@handle_errors
def stats_command(profile_path, as_json):
    """Agents, list length, components and maximal hourglasses of a profile"""
    stats = profile_stats(load_profile(profile_path))
    if as_json:
        click.echo(json.dumps({'schema': Config.JSON_SCHEMA, **stats}, indent=2))
        return
    click.echo(f'agents: {stats["agents"]}')
    click.echo(f'd: {stats["d"]}')
    click.echo(f'bipartite: {"yes" if stats["bipartite"] else "no"}')
    click.echo(f'complete: {"yes" if stats["complete"] else "no"}')
    click.echo('components: ' + ', '.join(f'{k}={v}' for k, v in stats['components'].items()))
    if stats['hourglasses'] is None:
        click.echo('hourglasses: n/a (d > 3)')
    else:
        click.echo(f'hourglasses: {stats["hourglasses"]}')
        click.echo('heights: ' + (' '.join(map(str, stats['heights'])) or '-'))
        click.echo(f'clusters: {stats["clusters"]}')
