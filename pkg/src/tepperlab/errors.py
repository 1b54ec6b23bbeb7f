"""Exception types shared across the package."""


class InputError(ValueError):
    """An input violates a documented precondition (maps to CLI exit code 2)."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget (maps to CLI exit code 3)."""
