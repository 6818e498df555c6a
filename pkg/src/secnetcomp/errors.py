"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class DivisionByZero(ToolkitError):
    """Multiplicative inverse of zero requested."""


class ShapeError(ToolkitError):
    """Matrix or vector dimensions are incompatible."""


class FieldMismatch(ToolkitError):
    """Operands live over different moduli."""


class DegenerateInput(ToolkitError):
    """Input violates a non-degeneracy requirement (e.g. repeated points)."""


class InvalidEdge(ToolkitError):
    """Unknown edge id."""


class NotACut(ToolkitError):
    """Edge set does not disconnect the sink from any source."""


class IncompleteCode(ToolkitError):
    """A required local encoding coefficient is missing."""


class TooLarge(ToolkitError):
    """Exhaustive state space exceeds the configured cap."""


class WrongFunctionClass(ToolkitError):
    """Closed-form bound applied to functions outside its shape."""


class FieldTooSmall(ToolkitError):
    """Greedy vector selection exhausted the field.

    Carries ``stuck_index``, the first basis position that could not be
    filled, so failures are auditable against an independent re-scan.
    """

    def __init__(self, message, stuck_index=None, partial=None):
        super().__init__(message)
        self.stuck_index = stuck_index
        self.partial = partial


class NeedUserBaseCode(ToolkitError):
    """No automatic base-code synthesis for this topology."""


class ConstructionBug(ToolkitError):
    """A constructed code failed its own verification; never returned silently."""


class WrongCase(ToolkitError):
    """Branch construction invoked outside its capacity regime."""


class NotCertified(ToolkitError):
    """Composition could not be certified secure by the subset criterion.

    The composition may still be secure; carries the allocation that
    lacked a certifying branch subset.
    """

    def __init__(self, message, allocation=None, certificates=None):
        super().__init__(message)
        self.allocation = allocation
        self.certificates = certificates or {}


class ParseError(ToolkitError):
    """Input file is malformed; message carries the location."""
