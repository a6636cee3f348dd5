"""Independent set to reaching an exchange-stable matching by swaps

For a graph on vertices v1..vn and a target size h, selector agents s_j, t_j
(j = 1..h) and vertex agents x_i, u_i, y_i, w_i (i = 1..n) are created. An
exchange-stable matching is reachable from the initial matching within 2h
swaps iff the graph has h pairwise nonadjacent vertices.
"""
from itertools import combinations
import logging

from models.matching import Matching
from models.profile import Profile
from utils.errors import ReductionError

logger = logging.getLogger(__name__)


def _vertex_index(graph):
    """vertex -> 1-based index, in sorted vertex order"""
    return {vertex: i for i, vertex in enumerate(sorted(graph.nodes), start=1)}


def is_to_pesm(graph, h):
    """(profile, initial matching, swap budget) for the instance (graph, h)"""
    n = graph.number_of_nodes()
    if not 1 <= h <= n:
        raise ReductionError(f'target size {h} out of range 1..{n}')
    index = _vertex_index(graph)
    neighbours = {
        index[vertex]: sorted(index[other] for other in graph.adj[vertex] if other != vertex)
        for vertex in graph.nodes
    }
    selectors = range(1, h + 1)
    vertices = range(1, n + 1)

    lists = {}
    for j in selectors:
        lists[f's{j}'] = [f'w{i}' for i in vertices] + [f't{j}']
        lists[f't{j}'] = [f'u{i}' for i in vertices] + [f'x{i}' for i in vertices] + [f's{j}']
    for i in vertices:
        lists[f'x{i}'] = [f't{j}' for j in selectors] + [f'y{i}']
        lists[f'y{i}'] = [f'u{i}', f'x{i}'] + [f'u{z}' for z in neighbours[i]]
        lists[f'u{i}'] = ([f'w{i}'] + [f'y{z}' for z in neighbours[i]] + [f'y{i}']
                          + [f't{j}' for j in selectors])
        lists[f'w{i}'] = [f's{j}' for j in selectors] + [f'u{i}']

    left = [f's{j}' for j in selectors] + [f'u{i}' for i in vertices] + [f'x{i}' for i in vertices]
    right = [f't{j}' for j in selectors] + [f'w{i}' for i in vertices] + [f'y{i}' for i in vertices]
    profile = Profile.from_lists(lists, (left, right))

    initial = [(f's{j}', f't{j}') for j in selectors]
    initial += [pair for i in vertices for pair in ((f'w{i}', f'u{i}'), (f'y{i}', f'x{i}'))]
    m0 = Matching((profile.agent_id(a), profile.agent_id(b)) for a, b in initial)
    logger.info('P-ESM instance: %d agents, budget %d', profile.n, 2 * h)
    return profile, m0, 2 * h


def independent_set_swaps(graph, independent):
    """Swap pairs (agent names) leading from the initial matching to stability

    For the z-th chosen vertex v: swap (t_z, w_v), then (x_v, u_v).
    """
    index = _vertex_index(graph)
    if any(graph.has_edge(a, b) for a, b in combinations(independent, 2)):
        raise ReductionError('vertex set is not independent')
    chosen = sorted(index[vertex] for vertex in independent)
    swaps = []
    for z, i in enumerate(chosen, start=1):
        swaps.append((f't{z}', f'w{i}'))
        swaps.append((f'x{i}', f'u{i}'))
    return swaps
