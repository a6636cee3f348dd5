import logging

import networkx as nx

from utils.errors import ProfileError
from utils.validators import ProfileValidator

logger = logging.getLogger(__name__)


class Profile:
    """Strict, symmetric, possibly incomplete preference profile

    Agents are dense integer ids 0..n-1 with unique names. ``prefs[a]`` lists
    the agents acceptable to ``a``, most preferred first. An unmatched agent
    ranks itself below every acceptable agent.
    """

    def __init__(self, names, prefs, bipartition=None):
        names = tuple(names)
        prefs = tuple(tuple(entries) for entries in prefs)
        if bipartition is not None:
            bipartition = (frozenset(bipartition[0]), frozenset(bipartition[1]))
        ProfileValidator.validate(names, prefs, bipartition)

        self.names = names
        self.prefs = prefs
        self.bipartition = bipartition
        self._ids = {name: agent for agent, name in enumerate(names)}
        # Inverse rank arrays for O(1) comparisons
        self._ranks = [{other: pos for pos, other in enumerate(entries)} for entries in prefs]

    @classmethod
    def from_lists(cls, lists, bipartition=None):
        """Build a profile from an ordered mapping name -> list of names"""
        names = list(lists)
        ids = {name: agent for agent, name in enumerate(names)}
        prefs = []
        for name in names:
            entries = []
            for other in lists[name]:
                if other not in ids:
                    raise ProfileError(f'agent {name} lists unknown agent {other}')
                entries.append(ids[other])
            prefs.append(entries)
        sides = None
        if bipartition is not None:
            left, right = bipartition
            missing = [name for name in list(left) + list(right) if name not in ids]
            if missing:
                raise ProfileError(f'bipartition names unknown agents {", ".join(missing)}')
            sides = ({ids[name] for name in left}, {ids[name] for name in right})
        return cls(names, prefs, sides)

    # Basic queries

    @property
    def n(self):
        return len(self.names)

    @property
    def agents(self):
        return range(len(self.names))

    @property
    def max_length(self):
        return max((len(entries) for entries in self.prefs), default=0)

    @property
    def is_bipartite(self):
        return self.bipartition is not None

    @property
    def is_complete(self):
        """Acceptability graph is complete (complete bipartite when sides are given)"""
        if self.bipartition is not None:
            left, right = self.bipartition
            return all(len(self.prefs[a]) == len(right if a in left else left) for a in self.agents)
        return all(len(entries) == self.n - 1 for entries in self.prefs)

    def agent_id(self, name):
        try:
            return self._ids[name]
        except KeyError:
            raise ProfileError(f'unknown agent {name}') from None

    def name(self, agent):
        return self.names[agent]

    def side(self, agent):
        """0 for the first bipartition side, 1 for the second, None when not bipartite"""
        if self.bipartition is None:
            return None
        return 0 if agent in self.bipartition[0] else 1

    def neighbors(self, agent):
        return self.prefs[agent]

    def degree(self, agent):
        return len(self.prefs[agent])

    def acceptable(self, judge, other):
        return other in self._ranks[judge]

    def rank(self, judge, other):
        """Position of other in judge's list; judge itself ranks last"""
        if other == judge:
            return len(self.prefs[judge])
        try:
            return self._ranks[judge][other]
        except KeyError:
            raise ProfileError(
                f'{self.names[other]} is not acceptable to {self.names[judge]}'
            ) from None

    def prefers(self, judge, a, b):
        """Check if judge strictly prefers a to b (judge itself meaning unmatched)"""
        if a == b:
            raise ProfileError('prefers() needs two distinct agents')
        return self.rank(judge, a) < self.rank(judge, b)

    def edges(self):
        """Acceptability edges as sorted id pairs, in id order"""
        return [(a, b) for a in self.agents for b in sorted(self.prefs[a]) if a < b]

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return (self.names, self.prefs, self.bipartition) == (other.names, other.prefs, other.bipartition)

    def __hash__(self):
        return hash((self.names, self.prefs))

    def __repr__(self):
        return f'<Profile {self.n} agents d={self.max_length}>'


def acceptability_graph(profile):
    """Undirected graph with an edge for each mutually acceptable pair"""
    graph = nx.Graph()
    for agent in profile.agents:
        graph.add_node(agent, name=profile.name(agent))
    graph.add_edges_from(profile.edges())
    logger.debug('acceptability graph: %d nodes, %d edges', graph.number_of_nodes(), graph.number_of_edges())
    return graph
