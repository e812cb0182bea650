"""Shared exception types, mapped to CLI exit codes by the front end."""


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured state-count budget."""


class CertificateError(ValueError):
    """A declared analytic certificate (derivative bounds, modulus setting,
    rational-approximation hypothesis) failed validation."""
