"""Exception hierarchy for hypmet.

Everything raised on purpose derives from HypmetError so the CLI can map
library failures to a single exit code.
"""


class HypmetError(Exception):
    """Base class for all hypmet errors."""


class DomainError(HypmetError, ValueError):
    """A point lies outside the domain a computation needs (boundary,
    puncture, or the point at infinity where it is not allowed)."""


class ContractError(HypmetError, ValueError):
    """Arguments violate a structural precondition (mismatched domains,
    missing data, degenerate parameter)."""


class DegeneratePathError(HypmetError, ValueError):
    """A path construction got coincident endpoints or zero speed."""


class CalibrationError(HypmetError, RuntimeError):
    """No constant in the searched range certifies the curvature bound,
    or a density was evaluated where one of its log factors vanishes."""


class UnreachableError(HypmetError, RuntimeError):
    """Mesh endpoints fell in different connected components."""


class SearchBudgetError(HypmetError, RuntimeError):
    """The chain search exhausted its budget without a feasible chain."""

    def __init__(self, message, best_partial=None):
        super().__init__(message)
        self.best_partial = best_partial
