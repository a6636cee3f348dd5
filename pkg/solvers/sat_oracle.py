"""Exact SAT-backed oracle for instances beyond exhaustive enumeration

One Boolean variable per acceptability edge; an optional "unmatched" variable
per agent. Exchange-blocking pairs are excluded clause by clause; envy cycles
are cut lazily: each model with an exchange-blocking coalition gets a clause
forbidding the coalition members' current partners together.
"""
import logging

from pysat.formula import IDPool
from pysat.solvers import Cadical195, Glucose42

from config import Config
from models.matching import Criterion, Matching
from solvers.stability import find_ebc, is_perfect, satisfies
from utils.errors import SolverError

logger = logging.getLogger(__name__)


class ExchangeStabilitySAT:
    """CNF model of (coalitional) exchange-stable matchings of a profile"""

    def __init__(self, profile, perfect_required=False, solver_type=None):
        self.profile = profile
        self.perfect_required = perfect_required
        self.solver_type = solver_type or Config.SAT_SOLVER
        self.vpool = IDPool()
        self.clauses = []
        self._encode()

    def _create_solver(self):
        """Create SAT solver instance"""
        if self.solver_type == 'glucose42':
            return Glucose42(bootstrap_with=self.clauses)
        if self.solver_type == 'cadical195':
            return Cadical195(bootstrap_with=self.clauses)
        raise SolverError(f'unknown SAT solver {self.solver_type}')

    def edge_var(self, a, b):
        return self.vpool.id(('edge', min(a, b), max(a, b)))

    def state_var(self, agent, partner):
        """Literal true iff agent holds partner (agent itself meaning unmatched)"""
        if partner == agent:
            return self.vpool.id(('free', agent))
        return self.edge_var(agent, partner)

    def states(self, agent):
        options = list(self.profile.neighbors(agent))
        if not self.perfect_required:
            options.append(agent)
        return options

    def _encode(self):
        profile = self.profile
        for agent in profile.agents:
            literals = [self.state_var(agent, p) for p in self.states(agent)]
            # exactly one state per agent
            self.clauses.append(literals)
            for i in range(len(literals)):
                for j in range(i + 1, len(literals)):
                    self.clauses.append([-literals[i], -literals[j]])

        seen = set()
        for x in profile.agents:
            for q in profile.neighbors(x):
                holders = [y for y in profile.neighbors(q) if y != x]
                if not self.perfect_required:
                    holders.append(q)
                for y in holders:
                    for p in self.states(x):
                        if p == q or profile.rank(x, q) >= profile.rank(x, p):
                            continue
                        if p == y or not profile.acceptable(y, p):
                            continue
                        if profile.rank(y, p) >= profile.rank(y, q):
                            continue
                        clause = tuple(sorted((-self.state_var(x, p), -self.state_var(y, q))))
                        if clause not in seen:
                            seen.add(clause)
                            self.clauses.append(list(clause))
        logger.debug('SAT model: %d variables, %d clauses', self.vpool.top, len(self.clauses))

    def _decode(self, model):
        true_vars = {lit for lit in model if lit > 0}
        pairs = [
            (a, b) for a, b in self.profile.edges()
            if self.edge_var(a, b) in true_vars
        ]
        return Matching(pairs)

    def solve(self, criterion=Criterion.ES):
        criterion = Criterion(criterion)
        rounds = 0
        with self._create_solver() as solver:
            while solver.solve():
                rounds += 1
                matching = self._decode(solver.get_model())
                if criterion is Criterion.ES:
                    return matching
                cycle = find_ebc(self.profile, matching)
                if cycle is None:
                    logger.debug('coalitional witness after %d rounds', rounds)
                    return matching
                solver.add_clause([-self.state_var(c, matching.partner(c)) for c in cycle])
        logger.debug('SAT oracle: no witness after %d rounds', rounds)
        return None


def solve_sat(profile, criterion=Criterion.ES, perfect_required=False, solver_type=None):
    """Witness matching meeting the criterion, or None; exact on any size"""
    model = ExchangeStabilitySAT(profile, perfect_required, solver_type)
    matching = model.solve(criterion)
    if matching is not None:
        if not satisfies(profile, matching, criterion):
            raise SolverError('SAT witness fails verification')
        if perfect_required and not is_perfect(profile, matching):
            raise SolverError('SAT witness is not perfect')
    return matching
