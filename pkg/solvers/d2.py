"""Linear-time solver for profiles whose preference lists have length at most two

Every component of the acceptability graph is then a path or a cycle. Paths
have a unique perfect matching (when even); even cycles have exactly two, and
the criterion is checked on each one inside the component alone.
"""
import logging

import networkx as nx

from models.matching import Criterion, Matching
from models.profile import acceptability_graph
from solvers.stability import ebps_among, envies_under
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


def _walk(graph, start):
    """Vertices of a path or cycle component in traversal order from start"""
    order = [start]
    previous, current = None, start
    while True:
        step = [v for v in sorted(graph.adj[current]) if v != previous and v != start]
        if not step or step[0] in order:
            return order
        previous, current = current, step[0]
        order.append(current)


def _component_ok(profile, partner, component, criterion):
    if criterion is Criterion.ES:
        return not ebps_among(profile, partner, component)
    envy = nx.DiGraph()
    envy.add_nodes_from(component)
    for x in component:
        mx = partner[x]
        for q in profile.neighbors(x):
            y = partner[q]
            if q != mx and envies_under(profile, x, mx, y, q):
                envy.add_edge(x, y)
    return nx.is_directed_acyclic_graph(envy)


def solve_d2(profile, criterion=Criterion.ES):
    """Perfect matching meeting the criterion, or None"""
    criterion = Criterion(criterion)
    if profile.max_length > 2:
        raise PreconditionError(f'lists must have length at most 2, found {profile.max_length}')

    graph = acceptability_graph(profile)
    pairs = []
    for component in sorted(nx.connected_components(graph), key=min):
        # odd components cannot be perfectly matched
        if len(component) % 2 == 1:
            logger.info('odd component of size %d', len(component))
            return None
        ends = sorted(v for v in component if graph.degree(v) == 1)
        if ends:
            order = _walk(graph, ends[0])
            pairs.extend(zip(order[0::2], order[1::2]))
            continue

        order = _walk(graph, min(component))
        first = list(zip(order[0::2], order[1::2]))
        second = list(zip(order[1::2], order[2::2] + order[:1]))
        for candidate in (first, second):
            partner = {}
            for a, b in candidate:
                partner[a] = b
                partner[b] = a
            if _component_ok(profile, partner, component, criterion):
                pairs.extend(candidate)
                break
        else:
            logger.info('even cycle through agent %d admits no stable perfect matching', min(component))
            return None
    return Matching(pairs)
