"""Exception hierarchy shared by every module of the package."""


class TopologyError(Exception):
    """Base class for every error raised by eulerpoincare."""


class DegenerateSimplex(TopologyError):
    """A simplex was given with a repeated vertex."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyComplex(TopologyError):
    pass


class SimplexNotFound(TopologyError):
    pass


class VertexNotFound(TopologyError):
    pass


class ZeroDimensional(TopologyError):
    """The operation needs a simplex of dimension at least one."""


class MixedDimension(TopologyError):
    pass


class NotAdjacent(TopologyError):
    pass


class NotASurfaceComplex(TopologyError):
    """Some edge lies in three or more triangles, or the complex is not a 2-complex."""


class NotPure(NotASurfaceComplex):
    pass


class Disconnected(TopologyError):
    pass


class NoTriangle(TopologyError):
    pass


class GluingCollision(TopologyError):
    pass


class NotClosedSurface(TopologyError):
    pass


class NotEligible(TopologyError):
    pass


class VertexStillUsed(NotEligible):
    pass


class NotFree(TopologyError):
    pass


class Stalled(TopologyError):
    """The reduction ran out of legal moves with triangles left.

    The stuck :class:`~eulerpoincare.cauchy.ReductionState` is attached as
    ``state`` and the partial step list as ``steps``.
    """

    def __init__(self, message, state=None, steps=()):
        super().__init__(message)
        self.state = state
        self.steps = list(steps)


class InvalidParameter(TopologyError):
    pass


class ParseError(TopologyError):
    """Malformed input text. ``line`` is 1-based, or None when unknown."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateMaximalFace(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class DegenerateFace(TopologyError):
    pass


class DiagonalCollision(TopologyError):
    pass
