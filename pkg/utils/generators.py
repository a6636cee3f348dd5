"""Random and exhaustive test-instance generators

All randomness flows through a ``random.Random`` instance; ``make_rng``
seeds it from EXSTAB_SEED unless a seed is given.
"""
from itertools import combinations
import random

from config import Config
from models.formula import CnfFormula
from models.matching import Matching
from models.profile import Profile
from utils.errors import ReductionError


def make_rng(seed=None):
    return random.Random(Config.SEED if seed is None else seed)


def _names(n, bipartite):
    if not bipartite:
        return [f'p{k}' for k in range(n)], None
    half = n // 2
    left = [f'u{k}' for k in range(half)]
    right = [f'w{k}' for k in range(half)]
    return left + right, (set(range(half)), set(range(half, n)))


def random_profile(rng, n, max_length=3, bipartite=False, extra_edges=None, perfect_seed=False):
    """Random strict profile with lists of length <= max_length

    Every agent first receives one neighbour (a random perfect matching when
    ``perfect_seed``), then up to ``extra_edges`` random edges are attempted.
    Agents left without a neighbour are dropped, so the result may have
    fewer than n agents.
    """
    if bipartite and n % 2:
        raise ValueError('bipartite profiles need an even number of agents')
    names, sides = _names(n, bipartite)
    adjacency = {a: set() for a in range(n)}

    def can_join(a, b):
        if a == b or b in adjacency[a]:
            return False
        if len(adjacency[a]) >= max_length or len(adjacency[b]) >= max_length:
            return False
        return sides is None or ((a in sides[0]) != (b in sides[0]))

    def join(a, b):
        adjacency[a].add(b)
        adjacency[b].add(a)

    order = list(range(n))
    rng.shuffle(order)
    if perfect_seed:
        if bipartite:
            right = sorted(sides[1])
            rng.shuffle(right)
            for a, b in zip(sorted(sides[0]), right):
                join(a, b)
        else:
            for a, b in zip(order[0::2], order[1::2]):
                join(a, b)
    for a in order:
        if adjacency[a]:
            continue
        candidates = [b for b in range(n) if can_join(a, b)]
        if candidates:
            join(a, rng.choice(candidates))

    attempts = n * max_length if extra_edges is None else extra_edges
    for _ in range(attempts):
        a, b = rng.randrange(n), rng.randrange(n)
        if can_join(a, b):
            join(a, b)

    kept = [a for a in range(n) if adjacency[a]]
    new_id = {a: k for k, a in enumerate(kept)}
    prefs = []
    for a in kept:
        entries = sorted(adjacency[a])
        rng.shuffle(entries)
        prefs.append([new_id[b] for b in entries])
    bipartition = None
    if sides is not None:
        bipartition = tuple({new_id[a] for a in side if a in new_id} for side in sides)
        if len(bipartition[0]) != len(bipartition[1]):
            # uneven sides after dropping isolated agents; retry
            return random_profile(rng, n, max_length, bipartite, extra_edges, True)
    return Profile([names[a] for a in kept], prefs, bipartition)


def random_matching(rng, profile, density=0.7):
    """Random matching: edges in random order, each kept with probability density"""
    edges = profile.edges()
    rng.shuffle(edges)
    taken = set()
    pairs = []
    for a, b in edges:
        if a in taken or b in taken or rng.random() > density:
            continue
        taken.update((a, b))
        pairs.append((a, b))
    return Matching(pairs)


def ladder_profile(rng, height, wrap=None):
    """Profile on one hourglass of the given height with random preferences

    Layers are (u{i}, w{i}). ``wrap`` adds edges between the two boundary
    layers: 'crossed' joins u0-w{h-1} and u{h-1}-w0, 'straight' joins
    u0-u{h-1} and w0-w{h-1}. Returns (profile, layers as id pairs).
    """
    names = [f'u{i}' for i in range(height)] + [f'w{i}' for i in range(height)]
    u = list(range(height))
    w = list(range(height, 2 * height))
    edges = set()
    for i in range(height):
        edges.add((u[i], w[i]))
        if i + 1 < height:
            edges.add((u[i], w[i + 1]))
            edges.add((u[i + 1], w[i]))
    last = height - 1
    if wrap == 'crossed':
        edges.update({(u[0], w[last]), (u[last], w[0])})
    elif wrap == 'straight':
        if height < 3:
            raise ValueError('straight wrap edges need height at least 3')
        edges.update({(u[0], u[last]), (w[0], w[last])})
    elif wrap is not None:
        raise ValueError(f'unknown wrap {wrap!r}')
    adjacency = {a: [] for a in range(2 * height)}
    for a, b in sorted(edges):
        adjacency[a].append(b)
        adjacency[b].append(a)
    prefs = []
    for a in range(2 * height):
        entries = list(adjacency[a])
        rng.shuffle(entries)
        prefs.append(entries)
    layers = list(zip(u, w))
    return Profile(names, prefs), layers


# (2,2)-3SAT formulas

def _occurrences(num_vars):
    return sorted(lit for var in range(1, num_vars + 1) for lit in (var, var, -var, -var))


def _compatible(clause):
    return len({abs(lit) for lit in clause}) == len(clause)


def iter_22_formulas(num_vars):
    """Every (2,2)-valid formula on num_vars variables, up to clause order"""
    seen = set()

    def partitions(remaining):
        if not remaining:
            yield []
            return
        head, rest = remaining[0], remaining[1:]
        for size in range(3):
            for picked in combinations(range(len(rest)), size):
                clause = (head,) + tuple(rest[k] for k in picked)
                if not _compatible(clause):
                    continue
                left = [lit for k, lit in enumerate(rest) if k not in picked]
                for tail in partitions(left):
                    yield [clause] + tail

    for clauses in partitions(_occurrences(num_vars)):
        key = tuple(sorted(tuple(sorted(c, key=lambda lit: (abs(lit), lit))) for c in clauses))
        if key in seen:
            continue
        seen.add(key)
        yield CnfFormula(num_vars, key)


def random_22_formula(rng, num_vars, attempts=100):
    """Random (2,2)-valid formula with clauses of one to three literals"""
    pool = _occurrences(num_vars)
    for _ in range(attempts):
        rng.shuffle(pool)
        clauses = []
        current = []
        for lit in pool:
            if len(current) == 3 or not _compatible(current + [lit]) or (current and rng.random() < 0.2):
                clauses.append(tuple(current))
                current = []
            current.append(lit)
        clauses.append(tuple(current))
        formula = CnfFormula(num_vars, clauses)
        if formula.is_22_valid():
            return formula
    raise ReductionError(f'no (2,2)-valid formula found in {attempts} attempts')
