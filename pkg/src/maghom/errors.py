"""Exception types shared across the package."""


class MaghomError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MaghomError):
    """An input structure violates one of its defining laws.

    The message names the violated law and, where possible, a witness.
    """


class InvalidComplexError(MaghomError):
    """A (double) chain complex fails d*d = 0 or has mismatched dimensions."""


class TruncationError(MaghomError):
    """A homology request exceeds the degree to which the data is faithful."""

    def __init__(self, requested: int, faithful: int):
        self.requested = requested
        self.faithful = faithful
        super().__init__(
            f"homology in degree {requested} requested, but this truncation is "
            f"only faithful through degree {faithful}; rebuild with "
            f"max degree >= {requested + 1}"
        )


class SchemaError(MaghomError):
    """An input document does not match its declared schema."""
