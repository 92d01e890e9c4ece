"""Exception hierarchy shared by every module."""


class FinslerError(Exception):
    """Base class for all library errors."""


class InputError(FinslerError, ValueError):
    """Malformed or out-of-range input (dimensions, parameters, names)."""


class JacobiError(InputError):
    """Structure constants are not antisymmetric or violate the Jacobi identity."""


class DecompositionError(FinslerError):
    """A reductive decomposition fails one of its invariants."""


class DomainError(FinslerError, ValueError):
    """Evaluation outside the domain of a map (e.g. at y = 0)."""


class ConvexityError(FinslerError):
    """A fundamental tensor is not positive definite."""


class AdmissibilityError(InputError):
    """A norm fails positivity, strong convexity or invariance requirements."""


class NotPositiveDefiniteError(AdmissibilityError):
    """An inner product (gram matrix) is not symmetric positive definite."""


class NormBoundError(AdmissibilityError):
    """|X|_alpha is outside the admissible range of the profile."""


class UnsupportedError(FinslerError):
    """The requested computation is not available for this configuration."""


class DegenerateFlagError(FinslerError):
    """The flag (y, u) spans less than a 2-plane."""


class DocumentError(InputError):
    """A model document is malformed; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
