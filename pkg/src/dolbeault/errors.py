class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class ConfigError(ValueError):
    """Malformed configuration or command-line input."""
