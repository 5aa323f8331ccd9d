"""Exception types shared across the package."""


class AddrepError(Exception):
    """Base class for all package-specific errors."""


class ParityMismatchError(AddrepError, ValueError):
    """A sequence does not have the parity an operation requires."""


class LimitMismatchError(AddrepError, ValueError):
    """Two sequences materialized to different limits were combined."""


class LimitExceededError(AddrepError, ValueError):
    """A query went past the limit up to which a table or sequence is known."""


class ContainmentError(AddrepError, ValueError):
    """A subset or equality precondition between two sequences does not hold."""


class ResourceBudgetError(AddrepError, MemoryError):
    """A requested table would exceed the configured size budget."""


class SequenceFormatError(AddrepError, ValueError):
    """A custom sequence (explicit list or file) violates the expected format."""
