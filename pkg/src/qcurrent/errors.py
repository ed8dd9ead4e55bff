"""Shared exception types."""


class DomainError(ValueError):
    """A mathematical precondition was violated (bad parameter, bad matrix, bad mesh)."""


class ConfigError(ValueError):
    """A run configuration is malformed or out of its admissible range."""
