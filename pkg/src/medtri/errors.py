class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class UnsupportedInputError(ValueError):
    """Input is well formed but lacks a property the operation needs
    (typically exact integer or rational medians)."""


class AuditFailure(AssertionError):
    """A universal identity failed to hold.

    These identities are algebraic facts, so a failure means a bug in this
    package rather than a property of the input.
    """
