"""Normalization of 3CNF formulas into (2,2)-3SAT"""
import logging

from models.formula import CnfFormula
from utils.errors import ReductionError

logger = logging.getLogger(__name__)


def _simplify(clauses):
    """Drop tautologies and clauses satisfied by pure literals, to a fixpoint"""
    clauses = [clause for clause in clauses if not any(-lit in clause for lit in clause)]
    while True:
        literals = {lit for clause in clauses for lit in clause}
        pure = {lit for lit in literals if -lit not in literals}
        if not pure:
            return clauses
        clauses = [clause for clause in clauses if not pure.intersection(clause)]


def r3sat_to_223sat(formula):
    """Equisatisfiable (2,2)-valid formula

    Each literal may occur at most twice in the input. Pure variables are fixed
    and tautological clauses dropped; every literal left with a single
    occurrence then gets two fresh variables a, b and the clauses
    (lit, a, -b), (a, -b), (-a, b), (-a, b).
    """
    clauses = []
    for j, clause in enumerate(formula.clauses):
        unique = tuple(dict.fromkeys(clause))
        if len(unique) > 3:
            raise ReductionError(f'clause {j + 1} has {len(unique)} literals')
        if not unique:
            raise ReductionError(f'clause {j + 1} is empty')
        clauses.append(unique)
    counts = CnfFormula(formula.num_vars, clauses).occurrences()
    for lit, count in sorted(counts.items()):
        if count > 2:
            raise ReductionError(f'literal {lit} occurs {count} times')

    clauses = _simplify(clauses)

    # Renumber the surviving variables densely, keeping their order
    survivors = sorted({abs(lit) for clause in clauses for lit in clause})
    renumber = {var: k for k, var in enumerate(survivors, start=1)}

    def rename(lit):
        return renumber[abs(lit)] if lit > 0 else -renumber[abs(lit)]

    clauses = [tuple(rename(lit) for lit in clause) for clause in clauses]
    num_vars = len(renumber)

    counts = CnfFormula(num_vars, clauses).occurrences()
    padded = list(clauses)
    for var in range(1, num_vars + 1):
        for lit in (var, -var):
            if counts[lit] == 1:
                a, b = num_vars + 1, num_vars + 2
                num_vars += 2
                padded.extend([(lit, a, -b), (a, -b), (-a, b), (-a, b)])
    result = CnfFormula(num_vars, tuple(padded))
    errors = result.validity_errors()
    if errors:
        raise ReductionError('normalization failed: ' + '; '.join(errors))
    logger.debug('normalized %d clauses into %d over %d variables',
                 len(formula.clauses), len(padded), num_vars)
    return result
