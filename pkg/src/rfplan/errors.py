"""Shared error types.

Every input that violates a physical or structural precondition raises
DomainError (or a subclass), so callers can distinguish bad inputs from bugs.
"""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""
