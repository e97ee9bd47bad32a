"""Error types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can emit
stable error reports.
"""

from __future__ import annotations


class InputError(ValueError):
    """Raised when an input violates a documented precondition."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration exceeds its configured budget.

    This is a distinct outcome, never a silent truncation: callers either
    re-run with a bigger budget or report the budget as exhausted.
    """

    code = "budget-exceeded"

    def __init__(self, message: str = "enumeration budget exceeded"):
        super().__init__(message)
