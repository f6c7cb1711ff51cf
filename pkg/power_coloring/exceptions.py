# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).


class UserError(Exception):
    """Error the caller can act on: bad input, bad document, bad usage."""


class ValidationError(UserError):
    """A domain precondition or invariant does not hold."""


class BudgetExceeded(UserError):
    """An exhaustive search went over its configured budget."""
