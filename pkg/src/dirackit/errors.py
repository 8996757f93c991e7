"""Exception hierarchy shared by all dirackit modules."""

from __future__ import annotations


class DiracKitError(Exception):
    """Base class for all mathematical and validation failures."""


class DimensionMismatchError(DiracKitError):
    """Operands declare incompatible ambient dimensions or shapes."""


class RankDeficientError(DiracKitError):
    """A basis or differential that must have full rank does not."""


class IsotropyError(DiracKitError):
    """A spanning family fails the symbolic isotropy identity."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DegenerateFiberError(DiracKitError):
    """Evaluation hit a point where the spanning sections drop rank.

    Carries the evaluated (rank-deficient) basis so callers can inspect
    the degenerate fiber.
    """

    def __init__(self, message: str, point, basis):
        super().__init__(message)
        self.point = point
        self.basis = basis


class NotInAnchorImageError(DiracKitError):
    """A tangent vector is not in the range of the anchor at the point."""


class AnnihilatorError(DiracKitError):
    """No polynomial annihilator basis found within the degree bound."""


class NonClosedFormError(DiracKitError):
    """A 2-form required to be closed is not."""


class CommutativityError(DiracKitError):
    """Action generators fail to commute pairwise."""


class LevelSetError(DiracKitError):
    """A level-set parametrization fails its defining identity."""


class PreconditionError(DiracKitError):
    """A stated operation precondition (e.g. moment-map regularity) fails."""


class QuadratureError(DiracKitError):
    """Quadrature failed to converge across the configured orders."""


class HomotopyError(DiracKitError):
    """A loop homotopy violates its endpoint conditions."""


class SceneError(DiracKitError):
    """A scene file is malformed or violates the scene schema."""
