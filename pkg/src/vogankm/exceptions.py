"""Exception types raised across the library."""


class VoganKMError(Exception):
    """Base class for all vogankm errors."""


class GCMError(VoganKMError):
    """A matrix failed generalized-Cartan-matrix validation.

    ``position`` is the (i, j) cell of the first violated axiom, or None
    when the input is not even a square integer matrix.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InvalidMatrix(GCMError):
    pass


class DiagonalNotTwo(GCMError):
    pass


class PositiveOffDiagonal(GCMError):
    pass


class ZeroAsymmetry(GCMError):
    pass


class NotSymmetrizable(VoganKMError):
    """No positive diagonal D makes D*A symmetric; ``edge`` names the
    off-tree edge whose consistency check failed."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class EmptySelection(VoganKMError):
    pass


class RankTooLarge(VoganKMError):
    pass


class TooManyFixedVertices(VoganKMError):
    pass


class InvalidInvolution(VoganKMError):
    pass


class UnpaintedVertex(VoganKMError):
    pass


class VertexNotFixed(VoganKMError):
    pass


class UnknownEntry(VoganKMError):
    """Catalog lookup miss; ``suggestions`` lists the nearest known names."""

    def __init__(self, message, suggestions=()):
        super().__init__(message)
        self.suggestions = tuple(suggestions)


class NoClaims(VoganKMError):
    pass


class UnknownVertexLabel(VoganKMError):
    pass


class RankBoundExceeded(VoganKMError):
    pass


class DiagramFileError(VoganKMError):
    pass
