"""Hourglasses of degree-three acceptability graphs

An hourglass of height h is a sequence of layers (u_i, w_i), i = 0..h-1, with
the layer edges {u_i, w_i} and the crossing edges {u_i, w_{i+1}} and
{u_{i+1}, w_i}. Every exchange-blocking pair of a perfect matching lives in a
4-cycle, and every 4-cycle is a height-2 hourglass, so a perfect matching is
exchange-stable iff it is stable inside each maximal hourglass.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
import logging

import networkx as nx

from models.matching import Matching
from solvers.stability import ebps_among

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hourglass:
    layers: tuple

    def __post_init__(self):
        object.__setattr__(self, 'layers', tuple(tuple(layer) for layer in self.layers))

    @property
    def height(self):
        return len(self.layers)

    @property
    def agents(self):
        return frozenset(agent for layer in self.layers for agent in layer)

    @property
    def connecting(self):
        """(u_0, w_0, u_{h-1}, w_{h-1})"""
        (u0, w0), (ul, wl) = self.layers[0], self.layers[-1]
        return u0, w0, ul, wl

    def ladder_neighbors(self, agent):
        """Neighbours of agent through layer and crossing edges"""
        for i, (u, w) in enumerate(self.layers):
            if agent in (u, w):
                other_side = 1 if agent == u else 0
                found = [self.layers[i][other_side]]
                for j in (i - 1, i + 1):
                    if 0 <= j < self.height:
                        found.append(self.layers[j][other_side])
                return found
        raise KeyError(agent)

    def trimmed(self, lo, hi):
        """Sub-hourglass made of layers lo..hi"""
        return Hourglass(self.layers[lo:hi + 1])

    def is_valid(self, graph):
        """Layer and crossing edges exist; inner agents have no other neighbours"""
        if self.height < 2 or len(self.agents) != 2 * self.height:
            return False
        for i, (u, w) in enumerate(self.layers):
            if not graph.has_edge(u, w):
                return False
            if i + 1 < self.height:
                nu, nw = self.layers[i + 1]
                if not (graph.has_edge(u, nw) and graph.has_edge(nu, w)):
                    return False
            if 0 < i < self.height - 1:
                for agent in (u, w):
                    if graph.degree(agent) != 3:
                        return False
        return True

    def __repr__(self):
        return f'<Hourglass h={self.height} {list(self.layers)}>'


@dataclass
class HourglassCluster:
    hourglasses: list
    agents: frozenset = field(default_factory=frozenset)

    @property
    def height(self):
        return self.hourglasses[0].height

    def __repr__(self):
        return f'<HourglassCluster {len(self.hourglasses)} x h={self.height} on {sorted(self.agents)}>'


class Category(Enum):
    """Which connecting agents a perfect matching matches askew"""

    I = 'I'
    II = 'II'
    III = 'III'
    IV = 'IV'
    V = 'V'
    VI = 'VI'


# Askew connecting agents by index into Hourglass.connecting
ASKEW = {
    Category.I: frozenset({0, 3}),
    Category.II: frozenset({1, 2}),
    Category.III: frozenset({0, 1}),
    Category.IV: frozenset({2, 3}),
    Category.V: frozenset({0, 1, 2, 3}),
    Category.VI: frozenset(),
}


# Discovery

def _next_layer(graph, layer, used):
    """Layer (y, x) extending layer (p, q) through a fresh 4-cycle, or None"""
    p, q = layer
    for x in sorted(graph.adj[p]):
        if x == q or x in used:
            continue
        for y in sorted(graph.adj[q]):
            if y == p or y in used or y == x:
                continue
            if graph.has_edge(x, y):
                return y, x
    return None


def find_max_hourglass_at(graph, edge):
    """Grow an hourglass from an edge: first extend one side, then the other"""
    u, w = edge
    used = {u, w}
    layers = [(u, w)]
    step = _next_layer(graph, (u, w), used)
    if step is None:
        return None
    while step is not None:
        layers.append(step)
        used.update(step)
        step = _next_layer(graph, layers[-1], used)
    step = _next_layer(graph, layers[0], used)
    while step is not None:
        layers.insert(0, step)
        used.update(step)
        step = _next_layer(graph, layers[0], used)
    return Hourglass(layers)


def four_cycles(graph):
    """Every 4-cycle as a height-2 hourglass, one per vertex set, in discovery order"""
    found = {}
    for a in sorted(graph.nodes):
        neighbors = sorted(graph.adj[a])
        for i, b in enumerate(neighbors):
            for d in neighbors[i + 1:]:
                for c in sorted(set(graph.adj[b]) & set(graph.adj[d])):
                    if c == a:
                        continue
                    key = frozenset((a, b, c, d))
                    if key not in found:
                        found[key] = Hourglass(((a, b), (c, d)))
    return list(found.values())


def _all_extensions(graph, layer, used):
    p, q = layer
    for x in sorted(graph.adj[p]):
        if x == q or x in used:
            continue
        for y in sorted(graph.adj[q]):
            if y != p and y not in used and y != x and graph.has_edge(x, y):
                yield y, x


def _height_three(graph, cycle):
    """Height-3 hourglasses containing a 4-cycle, for both of its layerings"""
    (a, b), (c, d) = cycle.layers
    for first, second in (((a, b), (c, d)), ((b, c), (d, a))):
        used = {a, b, c, d}
        for layer in _all_extensions(graph, second, used):
            yield Hourglass((first, second, layer))
        for layer in _all_extensions(graph, first, used):
            yield Hourglass((layer, first, second))


class _AgentIndex:
    """Per-agent lists of hourglass fingerprints, keeping only the first copy"""

    def __init__(self):
        self.lists = {}

    def add(self, hourglass):
        key = hourglass.agents
        anchor = min(key)
        bucket = self.lists.setdefault(anchor, [])
        if key in bucket:
            return False
        bucket.append(key)
        return True


def collect_hourglasses(graph):
    """All maximal hourglasses: (tall ones of height >= 4, clusters of small ones)"""
    index = _AgentIndex()
    tall = []
    tall_agents = set()
    for u, w in sorted((min(e), max(e)) for e in graph.edges()):
        if u in tall_agents or w in tall_agents:
            continue
        found = find_max_hourglass_at(graph, (u, w))
        if found is not None and found.height >= 4 and index.add(found):
            tall.append(found)
            tall_agents.update(found.agents)

    cycles = []
    for cycle in four_cycles(graph):
        if cycle.agents <= tall_agents:
            continue
        if cycle.agents & tall_agents:
            logger.warning('4-cycle %s overlaps a tall hourglass', sorted(cycle.agents))
        cycles.append(cycle)

    threes = []
    for cycle in cycles:
        for candidate in _height_three(graph, cycle):
            if candidate.agents <= tall_agents:
                continue
            if index.add(candidate):
                threes.append(candidate)
    three_sets = [h.agents for h in threes]

    small = list(threes)
    for cycle in cycles:
        if any(cycle.agents <= other for other in three_sets):
            continue
        if index.add(cycle):
            small.append(cycle)

    clusters = group_clusters(small)
    logger.info('found %d tall hourglasses and %d clusters', len(tall), len(clusters))
    return tall, clusters


def group_clusters(hourglasses):
    """Connected components of the vertex-overlap relation"""
    overlap = nx.Graph()
    overlap.add_nodes_from(range(len(hourglasses)))
    owners = {}
    for i, hourglass in enumerate(hourglasses):
        for agent in hourglass.agents:
            if agent in owners:
                overlap.add_edge(owners[agent], i)
            owners[agent] = i
    clusters = []
    for component in sorted(nx.connected_components(overlap), key=min):
        members = [hourglasses[i] for i in sorted(component)]
        agents = frozenset().union(*(h.agents for h in members))
        clusters.append(HourglassCluster(members, agents))
    return clusters


# Stable matchings inside one hourglass

def _symmetric(partner):
    """Close a partial partner map under the matching relation"""
    closed = dict(partner)
    for a, b in partner.items():
        closed.setdefault(b, a)
    return closed


def _layer_dp(profile, hourglass, allowed):
    """Matching of V(H) with partners drawn from allowed[agent], no ebp inside V(H)

    Processes layers in order; a state is the pair of partners of (u_i, w_i).
    Consecutive states must agree on the edges between their layers and be
    ebp-free on the four agents they cover. Blocking pairs through wrap-around
    or outside partners only involve the two boundary layers, so they are
    checked once for every reachable (first, last) pair of states.
    Returns a partner mapping or None.
    """
    layers = hourglass.layers
    h = len(layers)
    agents = hourglass.agents

    def options(i):
        u, w = layers[i]
        near = set(layers[i])
        if i > 0:
            near.update(layers[i - 1])
        if i + 1 < h:
            near.update(layers[i + 1])
        boundary = i in (0, h - 1)
        result = []
        for pu, pw in product(sorted(allowed[u]), sorted(allowed[w])):
            if not boundary and (pu not in near or pw not in near):
                continue
            if (pu == w) != (pw == u) or pu == pw:
                continue
            result.append((pu, pw))
        return result

    def consistent(i, state, nxt):
        # edges between layers i and i+1 must be claimed by both ends
        held = dict(zip(layers[i], state))
        held.update(zip(layers[i + 1], nxt))
        for a in layers[i]:
            for b in layers[i + 1]:
                if (held[a] == b) != (held[b] == a):
                    return False
        return True

    def local_ok(i, state, nxt):
        held = dict(zip(layers[i], state))
        held.update(zip(layers[i + 1], nxt))
        return not ebps_among(profile, _symmetric(held), held.keys())

    def verify(partner):
        for agent, other in partner.items():
            if other in agents and partner.get(other) != agent:
                return False
        outside = [other for other in partner.values() if other not in agents]
        if len(outside) != len(set(outside)):
            return False
        return not ebps_among(profile, _symmetric(partner), agents)

    all_options = [options(i) for i in range(h)]
    for first in all_options[0]:
        # back[i][state] = state of layer i-1 it was reached from
        back = [{first: None}]
        for i in range(h - 1):
            reached = {}
            for state in back[-1]:
                for nxt in all_options[i + 1]:
                    if nxt not in reached and consistent(i, state, nxt) and local_ok(i, state, nxt):
                        reached[nxt] = state
            if not reached:
                break
            back.append(reached)
        if len(back) < h:
            continue
        for last in back[-1]:
            partner = {}
            state = last
            for i in range(h - 1, -1, -1):
                partner.update(zip(layers[i], state))
                state = back[i][state]
            if verify(partner):
                return partner
    return None


def _brute_force(profile, agents, allowed):
    """Every assignment of partners to agents from allowed, ebp-free inside agents"""
    order = sorted(agents)
    partner = {}
    taken_outside = set()

    def branch(k):
        while k < len(order) and order[k] in partner:
            k += 1
        if k == len(order):
            if not ebps_among(profile, _symmetric(partner), agents):
                yield dict(partner)
            return
        agent = order[k]
        for other in sorted(allowed[agent]):
            if other in agents:
                if other in partner or other == agent:
                    continue
                partner[agent], partner[other] = other, agent
                yield from branch(k + 1)
                del partner[agent], partner[other]
            elif other not in taken_outside:
                partner[agent] = other
                taken_outside.add(other)
                yield from branch(k + 1)
                del partner[agent]
                taken_outside.discard(other)

    yield from branch(0)


def _inside(graph, agents):
    return {a: [b for b in graph.adj[a] if b in agents] for a in agents}


def _to_matching(partner):
    return Matching({(min(a, b), max(a, b)) for a, b in partner.items()})


def hourglass_perfect_es(profile, hourglass, graph):
    """Perfect matching of H[V(H)] without ebp inside V(H), or None

    Heights up to 4 are checked directly. Taller hourglasses have at most two
    wrap-around edges between their boundary layers besides the ladder, and
    the layer DP covers both matchings that use them and ones that do not.
    """
    agents = hourglass.agents
    allowed = _inside(graph, agents)
    if hourglass.height <= 4:
        partner = next(_brute_force(profile, agents, allowed), None)
    else:
        partner = _layer_dp(profile, hourglass, allowed)
    return None if partner is None else _to_matching(partner)


# Categories

def askew_neighbor(hourglass, graph, agent):
    """The neighbour of a connecting agent outside its ladder edges, or None"""
    ladder = set(hourglass.ladder_neighbors(agent))
    extra = [b for b in graph.adj[agent] if b not in ladder]
    return extra[0] if len(extra) == 1 else None


def classify(hourglass, graph, matching):
    """Category describing how matching treats the connecting agents, or None"""
    askew = frozenset(
        k for k, agent in enumerate(hourglass.connecting)
        if matching.partner(agent) not in hourglass.ladder_neighbors(agent)
    )
    for category, pattern in ASKEW.items():
        if askew == pattern:
            return category
    return None


def category_feasible(profile, hourglass, graph, category):
    """Matching of V(H) in the given category, stable inside V(H), or None

    Askew connecting agents are matched to their unique non-ladder neighbour,
    the others through ladder edges only.
    """
    category = Category(category)
    pattern = ASKEW[category]
    allowed = {a: list(hourglass.ladder_neighbors(a)) for a in hourglass.agents}
    for k, agent in enumerate(hourglass.connecting):
        if k in pattern:
            partner = askew_neighbor(hourglass, graph, agent)
            if partner is None:
                return None
            allowed[agent] = [partner]
    # askew partners inside H must point back
    for k in pattern:
        agent = hourglass.connecting[k]
        partner = allowed[agent][0]
        if partner in hourglass.agents and allowed.get(partner) != [agent]:
            return None
    partner = _layer_dp(profile, hourglass, allowed)
    return None if partner is None else _to_matching(partner)


def unit_options(profile, graph, agents):
    """Stable assignments of a small agent set, one per set of outside demands"""
    allowed = {a: sorted(graph.adj[a]) for a in agents}
    seen = set()
    options = []
    for partner in _brute_force(profile, agents, allowed):
        demands = frozenset((a, b) for a, b in partner.items() if b not in agents)
        if demands in seen:
            continue
        seen.add(demands)
        options.append(_to_matching(partner))
    return options


def cluster_matchings(profile, cluster, graph):
    """Matchings covering a cluster, stable inside it, one per outside-demand set"""
    return unit_options(profile, graph, cluster.agents)


