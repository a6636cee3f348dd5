from enum import Enum

from utils.errors import MatchingError


class Criterion(str, Enum):
    ES = 'es'
    CES = 'ces'


class Matching:
    """Set of disjoint agent pairs; unmatched agents are their own partner"""

    def __init__(self, pairs=()):
        partner = {}
        normalized = set()
        # pairs may be a one-shot iterator
        for a, b in pairs:
            if a == b:
                raise MatchingError(f'agent {a} cannot be matched to itself')
            for agent in (a, b):
                if agent in partner:
                    raise MatchingError(f'agent {agent} appears in two pairs')
            partner[a] = b
            partner[b] = a
            normalized.add((min(a, b), max(a, b)))
        self._partner = partner
        self._pairs = frozenset(normalized)

    @property
    def pairs(self):
        return self._pairs

    def partner(self, agent):
        return self._partner.get(agent, agent)

    def is_matched(self, agent):
        return agent in self._partner

    @property
    def matched_agents(self):
        return frozenset(self._partner)

    def canonical(self):
        """Sorted list of sorted pairs"""
        return tuple(sorted(self._pairs))

    def swapped(self, x, y):
        """Matching with the partners of matched agents x and y exchanged"""
        px, py = self._partner[x], self._partner[y]
        pairs = set(self._pairs)
        pairs.discard((min(x, px), max(x, px)))
        pairs.discard((min(y, py), max(y, py)))
        pairs.add((min(x, py), max(x, py)))
        pairs.add((min(y, px), max(y, px)))
        return Matching(pairs)

    def validate_for(self, profile):
        """Raise MatchingError unless every pair is an acceptability edge"""
        for a, b in self.canonical():
            if not (0 <= a < profile.n and 0 <= b < profile.n):
                raise MatchingError(f'pair ({a}, {b}) names an unknown agent')
            if not profile.acceptable(a, b):
                raise MatchingError(
                    f'{profile.name(a)} and {profile.name(b)} are not mutually acceptable'
                )
        return self

    def __len__(self):
        return len(self._pairs)

    def __iter__(self):
        return iter(self.canonical())

    def __contains__(self, pair):
        a, b = pair
        return (min(a, b), max(a, b)) in self._pairs

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return f'<Matching {list(self.canonical())}>'
