"""Exception hierarchy shared across the library."""


class SolstabError(Exception):
    """Base class for all library-specific failures."""


class NonConvergenceError(SolstabError):
    """Iteration budget exhausted before the requested tolerance was met."""


class NonFiniteError(SolstabError):
    """An integrand or objective produced NaN or infinity."""


class NoSignChangeError(SolstabError):
    """A root bracket does not straddle a sign change."""


class UnsupportedLambdaError(SolstabError):
    """Soliton constant outside the supported range."""


class WrongCaseError(SolstabError):
    """Operation called on a curve of the wrong lambda regime."""


class EndpointViolationError(SolstabError):
    """Test profile does not vanish at the piece boundary."""


class OutOfRangeError(SolstabError):
    """Parameter outside its admissible interval."""


class BelowThresholdError(SolstabError):
    """No critical length exists at or below the amplitude threshold."""


class GraphRegimeError(SolstabError):
    """Piece lies in the graphical (stable) regime; no certificate family."""


class NotGraphRegimeError(SolstabError):
    """Piece is not in the graphical regime required by the probe."""


class NotFoundInRangeError(SolstabError):
    """No sign change located up to the configured maximum length."""


class RadiusTooLargeError(SolstabError):
    """Cylinder radius admits no instability certificate from this family."""


class MismatchBeyondToleranceError(SolstabError):
    """Two independent evaluation routes disagree beyond tolerance."""
