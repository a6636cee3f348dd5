from collections import Counter
from dataclasses import dataclass, field
from itertools import product


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables 1..num_vars; a clause is a tuple of signed literals"""

    num_vars: int
    clauses: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'clauses', tuple(tuple(clause) for clause in self.clauses))

    def occurrences(self):
        """Counter literal -> number of occurrences"""
        return Counter(lit for clause in self.clauses for lit in clause)

    def clause_indices(self, lit):
        """Indices of the clauses containing lit, ascending"""
        return [j for j, clause in enumerate(self.clauses) if lit in clause]

    def validity_errors(self):
        """Every reason the formula is not (2,2)-valid"""
        errors = []
        for j, clause in enumerate(self.clauses):
            if not clause or len(clause) > 3:
                errors.append(f'clause {j + 1} has {len(clause)} literals')
            if len(set(clause)) != len(clause):
                errors.append(f'clause {j + 1} repeats a literal')
            if any(-lit in clause for lit in clause):
                errors.append(f'clause {j + 1} contains both polarities of a variable')
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    errors.append(f'clause {j + 1} uses unknown variable {lit}')
        counts = self.occurrences()
        for var in range(1, self.num_vars + 1):
            for lit in (var, -var):
                if counts[lit] != 2:
                    errors.append(f'literal {lit} occurs {counts[lit]} times')
        return errors

    def is_22_valid(self):
        return not self.validity_errors()

    def evaluate(self, assignment):
        """assignment maps variable -> bool"""
        return all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )

    def assignments(self):
        for values in product((False, True), repeat=self.num_vars):
            yield {var: values[var - 1] for var in range(1, self.num_vars + 1)}

    def satisfying_assignment(self):
        """First satisfying assignment by exhaustive enumeration, or None"""
        for assignment in self.assignments():
            if self.evaluate(assignment):
                return assignment
        return None

    def is_satisfiable(self):
        return self.satisfying_assignment() is not None
