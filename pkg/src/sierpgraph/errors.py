"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when an edge-list file or an in-memory edge set is malformed."""


class ResourceLimitError(RuntimeError):
    """A construction or search exceeded its configured budget.

    Callers treat this as "no answer", never as a wrong answer.
    """


class PreconditionError(ValueError):
    """An operation was called on input outside its domain (e.g. a non-tree)."""
