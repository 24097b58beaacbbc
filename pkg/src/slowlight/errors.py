"""Exception types shared across the toolkit."""


class SlowLightError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(SlowLightError):
    """Invalid or unknown configuration input."""


class GridResolutionError(SlowLightError):
    """Grid or solver settings too coarse for the requested computation."""


class AsymmetricMediumError(SlowLightError):
    """Closed-form figure of merit requested for an asymmetric medium."""


class TruncationRiskError(SlowLightError):
    """Absorption data does not decay at its edges; the principal-value
    integral would be corrupted by spectral truncation."""


class AmbiguousWidthError(SlowLightError):
    """A width measurement found more than one half-maximum crossing pair."""

    def __init__(self, message, candidates=None):
        super().__init__(message)
        self.candidates = candidates or []
