"""Exception hierarchy shared by every sigdim module."""


class SigdimError(Exception):
    """Base class for all errors raised by sigdim."""


class ParseError(SigdimError):
    """Malformed input text (edge list or JSON)."""


class NotATree(SigdimError):
    """The edge set is not a tree on at least two vertices."""


class InvalidParam(SigdimError, ValueError):
    """A numeric parameter is outside its allowed range."""


class DimensionMismatch(SigdimError, ValueError):
    """Two geometric objects live in spaces of different dimension."""


class NotACorner(SigdimError, ValueError):
    """A point expected to be a corner of a box is not one."""


class DuplicatePoints(SigdimError):
    """Two labels share a position, so some nearest-neighbour radius is zero."""

    def __init__(self, first, second):
        super().__init__(f"points {first!r} and {second!r} coincide")
        self.labels = (first, second)


class InternalInvariantViolation(SigdimError, RuntimeError):
    """The embedding ran out of corners. Signals a bug, never bad input."""

    def __init__(self, vertex, message):
        super().__init__(f"vertex {vertex}: {message}")
        self.vertex = vertex
