"""Exception types raised across the package."""


class NotThreshold(ValueError):
    """Raised when a graph cannot be peeled down to a single vertex."""


class InstanceTooLarge(RuntimeError):
    """Raised when a computation would exceed its configured work bound."""


class PatternUnsupported(ValueError):
    """Raised when no closed form applies to an image code."""


class PreconditionOutsideProof(ValueError):
    """Raised when an (n, k, w) triple violates the side conditions of a proof case."""
