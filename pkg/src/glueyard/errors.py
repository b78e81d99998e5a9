class DomainError(ValueError):
    """An input violates the precondition of an operation."""


class ResourceLimitError(RuntimeError):
    """A search exceeded its vertex or node budget."""
