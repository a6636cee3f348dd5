class ExstabError(Exception):
    """Base class for every error raised by this package"""


class ProfileFormatError(ExstabError):
    """Malformed profile, matching, CNF or graph text"""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class ProfileError(ExstabError):
    """Profile violates strictness, symmetry or bipartition rules"""

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__('; '.join(self.errors))


class MatchingError(ExstabError):
    """Pairs do not form a matching of the profile"""


class PreconditionError(ExstabError):
    """Solver called on an instance outside its domain"""


class SwapError(ExstabError):
    """Requested swap is not an exchange-blocking pair of the matching"""


class ReductionError(ExstabError):
    """Reduction input is outside the accepted class"""


class SolverError(ExstabError):
    """A solver produced a witness that fails verification"""
