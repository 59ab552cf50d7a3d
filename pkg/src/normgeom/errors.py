"""Exception hierarchy.

Every domain failure raises a subclass of :class:`NormGeomError`; the CLI
reports the class name as the error identifier.
"""


class NormGeomError(ValueError):
    """Base class for all domain errors."""

    @property
    def name(self):
        return type(self).__name__


class DimensionMismatch(NormGeomError):
    pass


class NonFiniteInput(NormGeomError):
    pass


class InvalidSpace(NormGeomError):
    pass


class InvalidParameters(NormGeomError):
    pass


class ZeroVector(NormGeomError):
    pass


class HypothesisViolated(NormGeomError):
    """Witness vectors do not satisfy the premise of a condition."""


class NotEuclideanRealizable(NormGeomError):
    pass


class InconsistentDistances(NormGeomError):
    pass


class NotAnIsometry(NormGeomError):
    pass


class GramMismatch(NormGeomError):
    pass


class RankDeficiencyUnstable(NormGeomError):
    pass


class LocusSearchExhausted(NormGeomError):
    pass


class DependentInputs(NormGeomError):
    pass


class NotIsosceles(NormGeomError):
    pass
