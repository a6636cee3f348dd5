"""Swap dynamics: exchanging the partners of exchange-blocking pairs"""
from dataclasses import dataclass
import logging

from models.matching import Matching
from solvers.stability import envies, is_exchange_stable, iter_ebps
from utils.errors import SwapError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwapStep:
    pair: tuple
    before: Matching
    after: Matching


def is_swappable(profile, matching, x, y):
    """Both agents matched and envying each other"""
    return (
        matching.is_matched(x) and matching.is_matched(y)
        and envies(profile, matching, x, y) and envies(profile, matching, y, x)
    )


def apply_swap(profile, matching, pair):
    """Matching after x and y exchange partners"""
    x, y = pair
    if not (matching.is_matched(x) and matching.is_matched(y)):
        raise SwapError(f'{profile.name(x)} and {profile.name(y)} must both be matched to swap')
    if not is_swappable(profile, matching, x, y):
        raise SwapError(f'({profile.name(x)}, {profile.name(y)}) is not an exchange-blocking pair')
    for agent, new_partner in ((x, matching.partner(y)), (y, matching.partner(x))):
        if not profile.acceptable(agent, new_partner):
            raise SwapError(
                f'{profile.name(agent)} and {profile.name(new_partner)} are not mutually acceptable'
            )
    return matching.swapped(x, y)


def swap_moves(profile, matching):
    """Swappable ebps in lexicographic order"""
    return [
        (x, y) for x, y in iter_ebps(profile, matching)
        if matching.is_matched(x) and matching.is_matched(y)
    ]


def reach_es(profile, m0, k):
    """Sequence of at most k swaps from m0 ending in an exchange-stable matching, or None

    Depth-first over swappable ebps in lexicographic order. A matching already
    explored with at least as much remaining budget is skipped.
    """
    best_budget = {}
    explored = 0

    def search(matching, budget):
        nonlocal explored
        explored += 1
        if is_exchange_stable(profile, matching):
            return []
        if budget == 0:
            return None
        for pair in swap_moves(profile, matching):
            after = matching.swapped(*pair)
            key = after.canonical()
            if best_budget.get(key, -1) >= budget - 1:
                continue
            best_budget[key] = budget - 1
            rest = search(after, budget - 1)
            if rest is not None:
                return [SwapStep(pair, matching, after)] + rest
        return None

    best_budget[m0.canonical()] = k
    steps = search(m0, k)
    logger.debug('reach_es explored %d matchings (k=%d, found=%s)', explored, k, steps is not None)
    return steps


def replay(profile, m0, steps):
    """Re-apply a swap sequence, checking every step; returns the final matching"""
    matching = m0
    for step in steps:
        matching = apply_swap(profile, matching, step.pair)
    return matching
