"""Exception taxonomy shared across the package.

Exit-code mapping used by the CLI: usage errors exit 1, input problems
(parse failures, axiom failures, unmet preconditions) exit 2, and
InvariantViolation exits 3 because it means a finite-dimensional theorem
was contradicted, i.e. an internal bug rather than bad input.
"""


class HopfkitError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(HopfkitError):
    """Operands built over different scalar fields."""


class DimensionError(HopfkitError):
    """Shapes or ambient dimensions do not match."""


class ParseError(HopfkitError):
    """Malformed input document; carries a human-readable location."""


class VerificationError(HopfkitError):
    """Input fails an axiom check; carries the failing witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(HopfkitError):
    """A documented precondition of an operation is not met."""


class InvariantViolation(HopfkitError):
    """A theorem-backed invariant failed: signals a bug, not bad input."""


class ConstructionError(InvariantViolation):
    """Internal consistency failure while building a derived structure."""
