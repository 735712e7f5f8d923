"""Exception types shared across the package."""


class LatccError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateElement(LatccError):
    pass


class UnknownElement(LatccError):
    pass


class CycleDetected(LatccError):
    """Antisymmetry violation while closing a relation."""


class NotDistributive(LatccError):
    pass


class SizeLimit(LatccError):
    """An enumeration guard was exceeded (override with LATCC_SIZE_GUARD)."""


class VertexOutOfRange(LatccError):
    pass


class PreconditionViolated(LatccError):
    pass


class ArityMismatch(LatccError):
    pass


class NotALatticeError(LatccError):
    """Raised when an operation needs a lattice but the poset is not one."""


class CyclicDag(LatccError):
    pass


class FanoutViolation(LatccError):
    pass


class NotLayered(LatccError):
    pass


class NotSkew(LatccError):
    pass


class BadDimensions(LatccError):
    pass


class MalformedString(LatccError):
    pass


class NonMonotoneGate(LatccError):
    pass


class InternalNegation(LatccError):
    pass


class LedgerUnsatisfied(LatccError):
    pass


class EmbeddingUnavailable(LatccError):
    pass


class TooSmall(LatccError):
    pass
