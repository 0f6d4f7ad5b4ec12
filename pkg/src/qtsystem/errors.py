"""Exception types raised by the engine.

Every failure the engine can detect is surfaced as one of these; nothing is
padded, guessed or silently dropped.
"""


class TSystemError(Exception):
    """Base class for all engine errors."""


class ParseError(TSystemError, ValueError):
    pass


class ParityError(TSystemError, ValueError):
    """A lattice point with i + j odd where an even point is required."""


class ConeViolation(TSystemError):
    """Two points that cannot belong to a common cluster (|di| < |dj|)."""


class ColumnClash(TSystemError):
    """One column carries two different heights inside a single monomial."""


class MissingValue(TSystemError, KeyError):
    pass


class BadWindow(TSystemError, ValueError):
    pass


class NotMutable(TSystemError):
    pass


class EdgeColumn(NotMutable):
    pass


class BelowBoundary(TSystemError):
    pass


class AboveBoundary(TSystemError):
    pass


class WindowExhausted(TSystemError):
    """The computation needs boundary data outside the finite window."""


class NotAdjacent(TSystemError, ValueError):
    pass


class UncertifiedSwap(TSystemError):
    pass


class NonInvertible(TSystemError, ArithmeticError):
    pass
