"""Envy graph, exchange-blocking pairs and coalitions, stability verdicts"""
import logging

import networkx as nx

from models.matching import Criterion

logger = logging.getLogger(__name__)


def envies_under(profile, x, mx, y, my):
    """Check if x, holding mx, envies y, holding my (mx == x means unmatched)"""
    if x == y or my == x:
        return False
    if not profile.acceptable(x, my):
        return False
    return profile.rank(x, my) < profile.rank(x, mx)


def envies(profile, matching, x, y):
    return envies_under(profile, x, matching.partner(x), y, matching.partner(y))


def envy_graph(profile, matching):
    """Directed graph with an arc x -> y whenever x envies y"""
    graph = nx.DiGraph()
    graph.add_nodes_from(profile.agents)
    for x in profile.agents:
        mx = matching.partner(x)
        for q in profile.neighbors(x):
            if q == mx:
                continue
            # y holds q: q's partner, or q itself when q is unmatched
            y = matching.partner(q)
            if envies_under(profile, x, mx, y, q):
                graph.add_edge(x, y)
    return graph


def ebps_among(profile, partner, agents):
    """All exchange-blocking pairs (x, y), x < y, inside agents

    ``partner`` maps agent -> partner; agents missing from it are unmatched.
    Both members of a reported pair belong to ``agents``.
    """
    members = set(agents)
    found = set()
    for x in members:
        mx = partner.get(x, x)
        for q in profile.neighbors(x):
            if q == mx:
                continue
            y = partner.get(q, q)
            if y not in members or y == x:
                continue
            if envies_under(profile, x, mx, y, q) and envies_under(profile, y, q, x, mx):
                found.add((min(x, y), max(x, y)))
    return sorted(found)


def iter_ebps(profile, matching):
    """Exchange-blocking pairs in lexicographic id order"""
    partner = {a: matching.partner(a) for a in matching.matched_agents}
    return ebps_among(profile, partner, profile.agents)


def find_ebp(profile, matching):
    """Lexicographically smallest exchange-blocking pair, or None"""
    pairs = iter_ebps(profile, matching)
    return pairs[0] if pairs else None


def find_ebc(profile, matching):
    """A directed cycle of the envy graph starting at its smallest agent, or None"""
    graph = envy_graph(profile, matching)
    try:
        arcs = nx.find_cycle(graph, source=sorted(graph.nodes))
    except nx.NetworkXNoCycle:
        return None
    cycle = [tail for tail, _ in arcs]
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def is_exchange_stable(profile, matching):
    return find_ebp(profile, matching) is None


def is_ces(profile, matching):
    return nx.is_directed_acyclic_graph(envy_graph(profile, matching))


def is_perfect(profile, matching):
    return len(matching.matched_agents) == profile.n


def is_maximal(profile, matching):
    """No two unmatched agents are mutually acceptable"""
    for a, b in profile.edges():
        if not matching.is_matched(a) and not matching.is_matched(b):
            return False
    return True


def satisfies(profile, matching, criterion):
    if Criterion(criterion) is Criterion.CES:
        return is_ces(profile, matching)
    return is_exchange_stable(profile, matching)


def blocking_witness(profile, matching, criterion):
    """An ebp for ES, an ebc for CES; None when the criterion holds"""
    if Criterion(criterion) is Criterion.CES:
        return find_ebc(profile, matching)
    return find_ebp(profile, matching)
