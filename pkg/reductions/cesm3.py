"""(2,2)-3SAT to perfect (coalitional) exchange-stable matching with lists of length three

Agent names follow a fixed scheme so a generated profile can be written to a
file and mapped back onto its formula:

    v{i} w{i} x{i} nx{i} y{i} ny{i}     variable i
    c{j} d{j}                           clause j
    e_i{i}_c{j} f_i{i}_c{j}             literal of variable i inside clause j
    a{z}_i{i}_c{j} b{z}_i{i}_c{j}       switch gadget of that occurrence

Variables and clauses are numbered from 1, as in DIMACS.
"""
from dataclasses import dataclass
import logging

from models.matching import Matching
from models.profile import Profile
from reductions.switch_gadget import SwitchState, gadget_names, switch_lists, switch_pairs
from utils.errors import ReductionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GadgetMap:
    """Names of every agent the reduction creates for a formula"""

    formula: object

    # Variable agents

    def v(self, i):
        return f'v{i}'

    def w(self, i):
        return f'w{i}'

    def x(self, lit):
        """x_i for a positive literal, its negation agent otherwise"""
        return f'x{lit}' if lit > 0 else f'nx{-lit}'

    def y(self, lit):
        return f'y{lit}' if lit > 0 else f'ny{-lit}'

    # Clause agents

    def c(self, j):
        return f'c{j}'

    def d(self, j):
        return f'd{j}'

    def e(self, i, j):
        return f'e_i{i}_c{j}'

    def f(self, i, j):
        return f'f_i{i}_c{j}'

    # Switch agents

    def switch(self, i, j):
        """(a_names, b_names) of the gadget for variable i in clause j"""
        return gadget_names(f'_i{i}_c{j}')

    def a(self, z, i, j):
        return self.switch(i, j)[0][z]

    def b(self, z, i, j):
        return self.switch(i, j)[1][z]

    def occurrence_indices(self, lit):
        """(o1, o2): the two clause numbers containing lit, ascending"""
        first, second = (j + 1 for j in self.formula.clause_indices(lit))
        return first, second

    def occurrences(self):
        """(lit, j) for every literal occurrence, by variable then clause"""
        found = []
        for j, clause in enumerate(self.formula.clauses, start=1):
            for lit in clause:
                found.append((lit, j))
        return sorted(found, key=lambda item: (abs(item[0]), item[1]))

    def boundary(self, lit, j):
        """alpha, beta, gamma and delta of the gadget for lit in clause j"""
        i = abs(lit)
        o1, o2 = self.occurrence_indices(lit)
        if j == o1:
            alpha, delta = self.x(lit), self.b(0, i, o2)
        else:
            alpha, delta = self.a(6, i, o1), self.y(lit)
        return {'alpha': alpha, 'beta': self.e(i, j), 'gamma': self.f(i, j), 'delta': delta}


def sat_to_cesm3(formula):
    """Bipartite profile with lists of length <= 3 and its GadgetMap

    The profile admits a perfect exchange-stable matching iff it admits a
    perfect coalitional exchange-stable one iff the formula is satisfiable.
    """
    errors = formula.validity_errors()
    if errors:
        raise ReductionError('formula is not (2,2)-valid: ' + '; '.join(errors))
    gm = GadgetMap(formula)
    lists = {}
    left, right = [], []

    for i in range(1, formula.num_vars + 1):
        pos_o1, pos_o2 = gm.occurrence_indices(i)
        neg_o1, neg_o2 = gm.occurrence_indices(-i)
        lists[gm.v(i)] = [gm.y(i), gm.y(-i)]
        lists[gm.w(i)] = [gm.x(i), gm.x(-i)]
        lists[gm.x(i)] = [gm.w(i), gm.b(0, i, pos_o1)]
        lists[gm.x(-i)] = [gm.w(i), gm.b(0, i, neg_o1)]
        lists[gm.y(i)] = [gm.v(i), gm.a(6, i, pos_o2)]
        lists[gm.y(-i)] = [gm.v(i), gm.a(6, i, neg_o2)]
        left += [gm.v(i), gm.x(i), gm.x(-i)]
        right += [gm.w(i), gm.y(i), gm.y(-i)]

    for j, clause in enumerate(formula.clauses, start=1):
        members = sorted(abs(lit) for lit in clause)
        lists[gm.c(j)] = [gm.e(i, j) for i in members]
        lists[gm.d(j)] = [gm.f(i, j) for i in members]
        left.append(gm.c(j))
        right.append(gm.d(j))
        for i in members:
            lists[gm.e(i, j)] = [gm.c(j), gm.a(0, i, j)]
            lists[gm.f(i, j)] = [gm.d(j), gm.b(6, i, j)]
            left.append(gm.f(i, j))
            right.append(gm.e(i, j))

    for lit, j in gm.occurrences():
        a_names, b_names = gm.switch(abs(lit), j)
        lists.update(switch_lists(a_names, b_names, gm.boundary(lit, j)))
        left += a_names
        right += b_names

    profile = Profile.from_lists(lists, (left, right))
    logger.info('3-CESM instance: %d variables, %d clauses, %d agents',
                formula.num_vars, len(formula.clauses), profile.n)
    return profile, gm


def _chosen_literals(formula, sigma, choice):
    chosen = {}
    for j, clause in enumerate(formula.clauses, start=1):
        lit = (choice or {}).get(j)
        if lit is None:
            lit = next((cand for cand in clause if sigma[abs(cand)] == (cand > 0)), None)
        if lit not in clause:
            raise ReductionError(f'chosen literal {lit} is not in clause {j}')
        if sigma[abs(lit)] != (lit > 0):
            raise ReductionError(f'chosen literal {lit} of clause {j} is false')
        chosen[j] = lit
    return chosen


def assignment_to_matching(profile, gm, sigma, choice=None):
    """Perfect coalitional exchange-stable matching built from a satisfying assignment

    ``sigma`` maps variable -> bool. ``choice`` maps clause number -> a true
    literal of that clause; clauses left out use their first true literal.
    """
    formula = gm.formula
    if not formula.evaluate(sigma):
        raise ReductionError('assignment does not satisfy the formula')
    chosen = _chosen_literals(formula, sigma, choice)

    pairs = set()

    def add(first, second):
        a, b = profile.agent_id(first), profile.agent_id(second)
        pairs.add((min(a, b), max(a, b)))

    for i in range(1, formula.num_vars + 1):
        if sigma[i]:
            add(gm.x(-i), gm.w(i))
            add(gm.v(i), gm.y(-i))
        else:
            add(gm.x(i), gm.w(i))
            add(gm.v(i), gm.y(i))

    for j, lit in chosen.items():
        add(gm.c(j), gm.e(abs(lit), j))
        add(gm.f(abs(lit), j), gm.d(j))

    for lit, j in gm.occurrences():
        if chosen[j] == lit:
            state = SwitchState.N1
        elif sigma[abs(lit)] == (lit > 0):
            state = SwitchState.ND
        else:
            state = SwitchState.N2
        a_names, b_names = gm.switch(abs(lit), j)
        for first, second in switch_pairs(a_names, b_names, gm.boundary(lit, j), state):
            add(first, second)

    return Matching(pairs)


def decode_assignment(profile, gm, matching):
    """Truth assignment read off w_i's partner: true iff w_i holds the negation agent"""
    sigma = {}
    for i in range(1, gm.formula.num_vars + 1):
        partner = matching.partner(profile.agent_id(gm.w(i)))
        sigma[i] = profile.name(partner) == gm.x(-i)
    return sigma
