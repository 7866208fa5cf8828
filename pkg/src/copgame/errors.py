"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates an operation's preconditions."""


class StateBudgetExceeded(RuntimeError):
    """A game would need more positions (or move-table entries) than the
    configured budget allows."""
