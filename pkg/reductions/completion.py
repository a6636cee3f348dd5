"""Completion of a 3-CESM instance into complete bipartite preferences

Each agent keeps its constructed list as a prefix, then ranks a middle block
(Y, negated Y and E agents for U, X, negated X and F agents for W), then every
remaining agent of the opposite side. Coalitional exchange-stable matchings
survive the completion and none are created.
"""
import logging

from models.profile import Profile
from utils.errors import ReductionError

logger = logging.getLogger(__name__)


def _middle_blocks(gm):
    formula = gm.formula
    middle_w, middle_u = set(), set()
    for i in range(1, formula.num_vars + 1):
        middle_w.update((gm.y(i), gm.y(-i)))
        middle_u.update((gm.x(i), gm.x(-i)))
    for lit, j in gm.occurrences():
        middle_w.add(gm.e(abs(lit), j))
        middle_u.add(gm.f(abs(lit), j))
    return middle_u, middle_w


def _ordered(names, order):
    position = {name: pos for pos, name in enumerate(order)}
    missing = [name for name in names if name not in position]
    if missing:
        raise ReductionError(f'side order omits {", ".join(sorted(missing))}')
    return sorted(names, key=position.__getitem__)


def complete_profile(profile, gm, order_u=None, order_w=None):
    """Complete bipartite profile extending a sat_to_cesm3 profile

    ``order_u`` / ``order_w`` list the names of each side; agents are ranked
    in that order inside the appended blocks. Both default to id order.
    """
    if profile.bipartition is None:
        raise ReductionError('completion needs a bipartite profile with known sides')
    left, right = profile.bipartition
    middle_u, middle_w = _middle_blocks(gm)

    # id order unless overridden
    u_names = [profile.name(a) for a in sorted(left)]
    w_names = [profile.name(a) for a in sorted(right)]
    u_order = _ordered(u_names, order_u) if order_u is not None else u_names
    w_order = _ordered(w_names, order_w) if order_w is not None else w_names

    lists = {}
    for agent in profile.agents:
        own = [profile.name(other) for other in profile.prefs[agent]]
        listed = set(own)
        if agent in left:
            opposite, middle = w_order, middle_w
        else:
            opposite, middle = u_order, middle_u
        block = [name for name in opposite if name in middle and name not in listed]
        rest = [name for name in opposite if name not in middle and name not in listed]
        lists[profile.name(agent)] = own + block + rest

    sides = ([profile.name(a) for a in sorted(left)], [profile.name(a) for a in sorted(right)])
    completed = Profile.from_lists(lists, sides)
    logger.info('completed %d agents to lists of length %d', completed.n, completed.max_length)
    return completed
