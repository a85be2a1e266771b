class ConfigurationError(ValueError):
    """Unsupported type, out-of-window parameters, malformed input."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""
