"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """Input violates a documented precondition (maps to exit status 2)."""


class RetryBudgetExceeded(RuntimeError):
    """A randomized construction did not succeed within its retry budget."""
