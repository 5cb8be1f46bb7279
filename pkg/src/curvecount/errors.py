"""Exception types shared across the package."""


class CurveCountError(Exception):
    """Base class for all package-specific errors."""


class RingMismatchError(CurveCountError, ValueError):
    """Operands live in incompatible ambient rings."""


class PreconditionError(CurveCountError, ValueError):
    """A mathematical precondition fails (bad box, rank != dim, ...)."""


class InternalCheckError(CurveCountError, RuntimeError):
    """An internal consistency assertion fails; indicates a bug, not bad input."""
