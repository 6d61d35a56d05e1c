"""Exception hierarchy.

Two roots matter for the CLI contract: DomainError maps to exit code 2
(bad inputs, excluded parameter values), NumericsError to exit code 3
(a computation that cannot certify its own accuracy).
"""


class AlphaPointsError(Exception):
    exit_code = 1


class DomainError(AlphaPointsError):
    exit_code = 2


class LengthError(DomainError):
    """Requested coefficient range exceeds what an input prefix provides."""


class NormalizationError(DomainError):
    """Dirichlet series not normalized to a(1) = 1."""


class InsufficientDataError(DomainError):
    """Estimate requested from an empty or inadequate point set."""


class RangeError(DomainError):
    """Ordinate coverage or evaluation ceiling exceeded."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) the pole at s = 1."""


class GeometryError(DomainError):
    """Derivative contour intersects a pole."""


class SingularityError(DomainError):
    """Gamma-quotient pole hit in the functional-equation factor."""


class SingularFactorError(DomainError):
    """A truncated Euler-product factor vanishes."""


class ParseError(DomainError):
    """Malformed descriptor or configuration string."""


class NumericsError(AlphaPointsError):
    exit_code = 3


class PrecisionError(NumericsError):
    """Euler-Maclaurin tail certificate cannot meet the requested error."""


class ResolutionError(NumericsError):
    """Phase tracking or point separation failed at the resolution floor."""


class BoundaryError(NumericsError):
    """Contour persistently passes through a root despite edge shifts."""


class CacheError(DomainError):
    """Point-cache line rejected on load."""
