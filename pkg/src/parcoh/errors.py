"""Exception hierarchy shared across the package.

Three families matter to the CLI exit-code contract: validation failures
(bad input data), inconsistent user assertions (detected during analysis),
and missing inputs that the user must supply to finish a computation.
"""
from __future__ import annotations


class AnalysisError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class ValidationError(AnalysisError):
    """Input data violates a structural precondition."""

    exit_code = 1


class MissingInputError(AnalysisError):
    """The computation needs data the input did not provide."""

    exit_code = 3


class NonRealInput(ValidationError):
    """A real-subfield operation received an element with imaginary part."""


class NonRealCoefficients(ValidationError):
    """A Sturm computation received a polynomial with non-real coefficients."""


class BadEigenvalueCertificate(ValidationError):
    """A supplied eigenvalue list fails verification against the matrix."""


class ScalarFieldTooSmall(MissingInputError):
    """Eigenvalue discovery is exhausted; a certificate is required.

    Raised when a characteristic (or minimal) polynomial cannot be split
    over the working field by the built-in discovery routes.
    """


class JacobiViolation(ValidationError):
    def __init__(self, i: int, j: int, k: int, residual):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on basis triple ({i}, {j}, {k}); "
            f"residual {residual}"
        )


class NotAutomorphism(ValidationError):
    def __init__(self, name: str, i: int, j: int, residual):
        self.generator = name
        self.pair = (i, j)
        self.residual = residual
        super().__init__(
            f"generator {name!r} is not a bracket automorphism: "
            f"fails on basis pair ({i}, {j}); residual {residual}"
        )


class Singular(ValidationError):
    """A matrix required to be invertible is singular."""


class NotInvariant(ValidationError):
    def __init__(self, name: str, space: str):
        self.generator = name
        self.space = space
        super().__init__(
            f"generator {name!r} does not preserve the characteristic "
            f"ideal {space!r}; input automorphisms are inconsistent"
        )


class MalformedWord(ValidationError):
    """A relator word uses a symbol outside the generator range."""


class LiftFailure(AnalysisError):
    """The semisimple-complement correction system is inconsistent.

    This cannot happen for a valid characteristic-zero Lie algebra; it
    signals a bug or corrupted input.
    """


class NotSemisimple(ValidationError):
    """Simple-ideal decomposition was asked for a non-semisimple algebra."""


class MissingB1Input(MissingInputError):
    """A rank-one factor is present and no quotient Betti number was given."""


class NoB1Data(MissingInputError):
    """Neither a presentation nor a manifold Betti override is available."""


class MissingAbelianizationImages(MissingInputError):
    def __init__(self, names):
        self.names = list(names)
        super().__init__(
            "generators without abelianization images: " + ", ".join(self.names)
        )


class PerfectSquareInput(ValidationError):
    """A Pell solver was handed a perfect square."""


class BadParams(ValidationError):
    """Example constructor parameters are out of range."""


class InputFormatError(ValidationError):
    """An analysis input file does not match the documented schema."""
