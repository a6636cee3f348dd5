"""Switch gadget: fourteen agents whose stable states encode true, false or don't-care

Agents a0..a6 sit on the U side and b0..b6 on the W side. Four boundary agents
attach the gadget to the rest of a profile: alpha (U) and beta (W) next to the
a0/b0 end, gamma (U) and delta (W) next to the a6/b6 end.
"""
from enum import Enum

from models.profile import Profile

GADGET_SIZE = 7
BOUNDARY = ('alpha', 'beta', 'gamma', 'delta')

# ('a', z) / ('b', z) are gadget agents, plain strings are boundary agents
A_LISTS = (
    (('b', 1), 'beta'),
    (('b', 0), ('b', 2), ('b', 1)),
    (('b', 3), ('b', 1), ('b', 2)),
    (('b', 2), ('b', 3), ('b', 4)),
    (('b', 4), ('b', 3), ('b', 5)),
    (('b', 6), ('b', 4), ('b', 5)),
    (('b', 5), 'delta'),
)
B_LISTS = (
    (('a', 1), 'alpha'),
    (('a', 0), ('a', 2), ('a', 1)),
    (('a', 2), ('a', 3), ('a', 1)),
    (('a', 4), ('a', 3), ('a', 2)),
    (('a', 3), ('a', 5), ('a', 4)),
    (('a', 6), ('a', 4), ('a', 5)),
    (('a', 5), 'gamma'),
)


class SwitchState(str, Enum):
    N1 = 'n1'
    N2 = 'n2'
    ND = 'nd'


class BoundaryOrder(str, Enum):
    """Fixed preference choices for the boundary agents of a standalone gadget"""
    GADGET_FIRST = 'gadget-first'
    GADGET_FIRST_REVERSED = 'gadget-first-reversed'
    GADGET_LAST = 'gadget-last'


def _resolve(entry, a_names, b_names, boundary):
    if isinstance(entry, str):
        return boundary[entry]
    kind, z = entry
    return a_names[z] if kind == 'a' else b_names[z]


def switch_lists(a_names, b_names, boundary):
    """Preference lists of the fourteen gadget agents, keyed by name

    ``boundary`` maps 'alpha', 'beta', 'gamma', 'delta' to agent names.
    """
    lists = {}
    for z in range(GADGET_SIZE):
        lists[a_names[z]] = [_resolve(e, a_names, b_names, boundary) for e in A_LISTS[z]]
        lists[b_names[z]] = [_resolve(e, a_names, b_names, boundary) for e in B_LISTS[z]]
    return lists


def switch_pairs(a_names, b_names, boundary, state):
    """Name pairs of N1, N2 or ND for one gadget"""
    a, b = a_names, b_names
    state = SwitchState(state)
    if state is SwitchState.N1:
        pairs = [(boundary['alpha'], b[0]), (a[6], boundary['delta'])]
        pairs += [(a[z - 1], b[z]) for z in range(1, GADGET_SIZE)]
    elif state is SwitchState.N2:
        pairs = [(a[0], boundary['beta']), (boundary['gamma'], b[6])]
        pairs += [(a[z], b[z - 1]) for z in range(1, GADGET_SIZE)]
    else:
        pairs = [
            (boundary['alpha'], b[0]), (a[0], boundary['beta']),
            (a[6], boundary['delta']), (boundary['gamma'], b[6]),
            (a[1], b[2]), (a[2], b[1]), (a[3], b[3]), (a[4], b[5]), (a[5], b[4]),
        ]
    return pairs


def gadget_names(suffix=''):
    a_names = [f'a{z}{suffix}' for z in range(GADGET_SIZE)]
    b_names = [f'b{z}{suffix}' for z in range(GADGET_SIZE)]
    return a_names, b_names


def standalone_switch(order=BoundaryOrder.GADGET_FIRST):
    """18-agent profile: one gadget plus its four boundary agents

    Each boundary agent's list holds its gadget neighbour and both
    boundary agents of the other side. Returns (profile, a_names, b_names).
    """
    order = BoundaryOrder(order)
    a_names, b_names = gadget_names()
    boundary = {name: name for name in BOUNDARY}
    lists = switch_lists(a_names, b_names, boundary)

    neighbour = {'alpha': b_names[0], 'beta': a_names[0], 'gamma': b_names[6], 'delta': a_names[6]}
    across = {'alpha': ['beta', 'delta'], 'gamma': ['beta', 'delta'],
              'beta': ['alpha', 'gamma'], 'delta': ['alpha', 'gamma']}
    for name in BOUNDARY:
        others = list(across[name])
        if order is BoundaryOrder.GADGET_FIRST_REVERSED:
            others.reverse()
        if order is BoundaryOrder.GADGET_LAST:
            lists[name] = others + [neighbour[name]]
        else:
            lists[name] = [neighbour[name]] + others

    left = a_names + ['alpha', 'gamma']
    right = b_names + ['beta', 'delta']
    profile = Profile.from_lists(lists, (left, right))
    return profile, a_names, b_names


def gadget_restriction(profile, matching, a_names, b_names):
    """Name pairs of the matching touching a gadget agent"""
    members = {profile.agent_id(name) for name in a_names + b_names}
    return {
        frozenset((profile.name(x), profile.name(y)))
        for x, y in matching.canonical() if x in members or y in members
    }


def identify_state(profile, matching, a_names, b_names, boundary):
    """The SwitchState the matching realizes on the gadget, or None"""
    restricted = gadget_restriction(profile, matching, a_names, b_names)
    for state in SwitchState:
        expected = {frozenset(p) for p in switch_pairs(a_names, b_names, boundary, state)}
        if restricted == expected:
            return state
    return None
