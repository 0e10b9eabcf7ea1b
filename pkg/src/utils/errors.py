"""
Exception hierarchy for g2lts
"""


class G2LtsError(ValueError):
    """Base class for every error raised by the library."""


class ShapeError(G2LtsError):
    """Operands have incompatible shapes (vector lengths, n, matrix sizes)."""


class DomainError(G2LtsError):
    """An argument lies outside the domain of the operation."""


class ValidationError(G2LtsError):
    """An object fails a structural check (orthonormality, symplecticity, ...)."""


class DescriptorError(G2LtsError):
    """A type descriptor is malformed or violates a bound for the given n."""


class DegenerateInputError(G2LtsError):
    """Input vectors are linearly dependent where independence is required."""


class ConstructionError(G2LtsError):
    """A geometric construction produced residuals above tolerance."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual
