"""Exception and warning types shared across the package."""


class LiError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LiError, ValueError):
    """Invalid argument or configuration, detected before any computation."""


class DomainError(ValidationError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or too close to) a pole."""


class PrecisionError(LiError):
    """The requested accuracy cannot be met: either an internal truncation
    bound failed to reach the target, or the guard digits are insufficient
    for the cancellation in a binomial sum."""


class ConventionError(LiError):
    """A table was supplied in the wrong Stieltjes-constant convention."""


class CoverageError(LiError):
    """A table or triangle does not cover the indices an operation needs."""


class RealityCheckError(LiError):
    """A coefficient that must be real came back with a non-negligible
    imaginary residue (undersampled or misconfigured contour)."""


class BranchTrackingError(LiError):
    """Continuous tracking of arg f along a contour failed: adjacent nodes
    differ by too much, or the argument does not close up after one turn."""


class CacheFormatError(LiError):
    """A gamma cache file failed validation.

    `reason` is one of: 'malformed-header', 'convention-missing',
    'entry-count', 'checksum-mismatch', 'bad-entry'.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class ZeroTableError(LiError):
    """A zero-ordinate table failed parsing or validation."""


class ResourceLimitError(LiError):
    """A symbolic expansion was requested beyond the supported size."""


class AliasingWarning(UserWarning):
    """Trailing contour coefficients do not decay: aliasing suspected."""


class DivergenceWarning(UserWarning):
    """More asymptotic terms requested than the smallest-term cutoff."""
