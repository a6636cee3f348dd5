"""Exhaustive enumeration oracle for small instances"""
import logging

from models.matching import Criterion, Matching
from solvers.stability import envies_under, is_exchange_stable, is_perfect, satisfies

logger = logging.getLogger(__name__)


def enumerate_matchings(profile, perfect_only=False):
    """Yield every matching (or every perfect matching) exactly once

    Branches on the lowest-id uncovered agent: leave it unmatched (unless
    perfect_only) or match it to each acceptable higher-id free agent.
    """
    n = profile.n
    covered = [False] * n
    pairs = []

    def branch(start):
        agent = start
        while agent < n and covered[agent]:
            agent += 1
        if agent == n:
            yield Matching(pairs)
            return
        covered[agent] = True
        if not perfect_only:
            yield from branch(agent + 1)
        for other in sorted(profile.neighbors(agent)):
            if other > agent and not covered[other]:
                covered[other] = True
                pairs.append((agent, other))
                yield from branch(agent + 1)
                pairs.pop()
                covered[other] = False
        covered[agent] = False

    yield from branch(0)


def _pruned_es_matchings(profile, perfect_only):
    """Matchings with no ebp, pruning partial assignments that already block

    An ebp only involves the four agents x, y, M(x), M(y); once all four are
    decided the pair can be checked, so every pair is tested as soon as both
    sides are fixed and left undecided agents are never blamed.
    """
    n = profile.n
    partner = [None] * n
    pairs = []

    def blocks(agent):
        # agent's own state is final; test it against every decided agent
        ma = partner[agent]
        for q in profile.neighbors(agent):
            if q == ma or partner[q] is None:
                continue
            y = partner[q]
            if y == agent:
                continue
            if partner[y] is None:
                continue
            if envies_under(profile, agent, ma, y, q) and envies_under(profile, y, q, agent, ma):
                return True
        return False

    def branch(start):
        agent = start
        while agent < n and partner[agent] is not None:
            agent += 1
        if agent == n:
            yield Matching(pairs)
            return
        if not perfect_only:
            partner[agent] = agent
            if not blocks(agent):
                yield from branch(agent + 1)
            partner[agent] = None
        for other in sorted(profile.neighbors(agent)):
            if other > agent and partner[other] is None:
                partner[agent], partner[other] = other, agent
                pairs.append((agent, other))
                if not blocks(agent) and not blocks(other):
                    yield from branch(agent + 1)
                pairs.pop()
                partner[agent] = partner[other] = None

    yield from branch(0)


def iter_es_matchings(profile, perfect_only=False):
    """Every exchange-stable (perfect, if asked) matching in enumeration order"""
    for matching in _pruned_es_matchings(profile, perfect_only):
        if perfect_only and not is_perfect(profile, matching):
            continue
        if is_exchange_stable(profile, matching):
            yield matching


def solve_brute(profile, criterion=Criterion.ES, perfect_required=False):
    """First matching in enumeration order meeting the criterion, or None"""
    criterion = Criterion(criterion)
    for matching in iter_es_matchings(profile, perfect_required):
        if satisfies(profile, matching, criterion):
            logger.debug('brute force witness %s', matching)
            return matching
    return None


def _utility(profile, agent, partner):
    # Lower is better; being unmatched ranks last
    return profile.rank(agent, partner)


def is_pareto_optimal(profile, matching):
    """No matching makes an agent better off without making another worse off"""
    current = [_utility(profile, a, matching.partner(a)) for a in profile.agents]
    for other in enumerate_matchings(profile):
        better = False
        worse = False
        for agent in profile.agents:
            value = _utility(profile, agent, other.partner(agent))
            if value < current[agent]:
                better = True
            elif value > current[agent]:
                worse = True
                break
        if better and not worse:
            return False
    return True
