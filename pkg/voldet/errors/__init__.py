import sys


class BaseErrorHandler:

    def capture_exception(self, exception):
        print(exception, file=sys.stderr)


class VoldetError(Exception):
    pass


class NotationError(VoldetError):  # malformed braid or PD text
    pass


class DiagramError(VoldetError):  # code not realizable, or a predicate needs a connected diagram
    pass


class HypothesisError(VoldetError):
    """
    a theorem or bound was asked for outside of its hypotheses.
    `hypothesis` names the failing predicate (eg. 'alternating', 't > 8')
    """

    def __init__(self, hypothesis, message=None):
        super().__init__(message or f"hypothesis failed: {hypothesis}")
        self.hypothesis = hypothesis


class LimitExceeded(VoldetError):  # exponential oracles refuse inputs above their configured limit
    pass


class DeterminantMismatch(VoldetError):
    def __init__(self, values):
        super().__init__(f"determinant routes disagree: {values}")
        self.values = values


class CensusError(VoldetError):  # unreadable table or missing mandatory header
    pass


class CacheCorrupt(VoldetError):
    pass
