class SolverError(Exception):
    """Base class for every error raised by the solver library."""


class InputError(SolverError, ValueError):
    """Raised when a caller supplies arguments that violate an operation's preconditions."""


class EnumerationLimitError(InputError):
    """Raised when an exhaustive routine is asked to enumerate beyond its configured limit."""


class NotAMatroidError(InputError):
    """Raised when rank or closure is requested from an oracle not declared to be a matroid."""
