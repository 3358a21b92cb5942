"""Shared exception types."""


class AutoratioError(Exception):
    """Base class for all library errors."""


class GraphError(AutoratioError, ValueError):
    """Invalid graph data: loops, unknown endpoints, duplicate labels."""


class FormatError(AutoratioError, ValueError):
    """Malformed serialized structure file."""


class DomainError(AutoratioError, ValueError):
    """A word product was requested outside the partial-group domain."""


class BudgetExceededError(AutoratioError, RuntimeError):
    """An enumeration was refused because it exceeds its configured budget."""
