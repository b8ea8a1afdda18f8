"""Exception hierarchy shared across the package."""


class AtlasError(Exception):
    """Base class for every error raised by threshold_atlas."""


class DomainError(AtlasError, ValueError):
    """An argument lies outside the domain of the operation."""


class IntegralityError(AtlasError, ArithmeticError):
    """An interpolated coefficient came out non-integral."""


class SamplingError(AtlasError):
    """Finite-field samples disagree with the interpolated polynomial."""


class ConsistencyError(AtlasError, AssertionError):
    """An internal cross-check failed; this indicates a bug, not bad input."""


class FixedPointError(DomainError):
    """The involution was applied to one of its fixed points."""
