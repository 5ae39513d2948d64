"""Exception types shared across the package.

Every domain failure raises a subclass of ThirdFormError so callers (CLI,
service) can distinguish bad input from genuine bugs.
"""


class ThirdFormError(Exception):
    """Base class for all errors raised by this package."""


class RankDeficient(ThirdFormError):
    """Vectors fail the linear independence / conditioning requirement."""


class NullVector(ThirdFormError):
    """A Lorentz vector is null or has the wrong causal character."""


class DimensionMismatch(ThirdFormError):
    """Operands have incompatible dimensions."""


class NotBilinear(ThirdFormError):
    """Component data does not describe a bilinear form."""


class DegenerateFamily(ThirdFormError):
    """No sampled normal direction separates the operator family consistently."""


class NotUmbilicalThirdForm(ThirdFormError):
    """The third fundamental form is not a multiple of the metric."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class AdaptednessViolated(ThirdFormError):
    """A candidate block is not invariant under both shape operators."""


class UnequalHalfDimensions(ThirdFormError):
    """The +/- eigenspaces of a balanced block differ in dimension."""


class NonConstantRho(ThirdFormError):
    """The second shape operator is not scalar on a half-block."""


class InvalidParams(ThirdFormError):
    """Synthesis parameters are outside their allowed ranges."""


class NotFlat(ThirdFormError):
    """Shape operators do not commute, so no common eigenbasis exists."""


class OutOfDomain(ThirdFormError):
    """A chart point lies outside the immersion's domain box."""


class StepTooLarge(ThirdFormError):
    """Finite-difference Richardson pair disagrees beyond tolerance."""


class MissingRicci(ThirdFormError):
    """An intrinsic Ricci tensor is required but was not supplied."""


class NotOnQuadric(ThirdFormError):
    """The immersion does not lie on the claimed central quadric."""


class UnknownName(ThirdFormError):
    """No catalog entry with the requested name."""


class BadParams(ThirdFormError):
    """Catalog entry parameters are malformed or out of range."""


class CurvatureSumZero(ThirdFormError):
    """Reciprocal factor curvatures sum to zero; no target space form."""


class SignatureMismatch(ThirdFormError):
    """Factor ambients cannot be assembled with the requested signature."""


class BadCurvature(ThirdFormError):
    """Curvature parameter has the wrong sign or is zero."""


class CodimensionUnsupported(ThirdFormError):
    """Analysis requires codimension two (or a flat normal bundle)."""


class SamplingFailed(ThirdFormError):
    """Could not evaluate the immersion at a sampled chart point."""
