"""Exception types raised by the light field toolkit."""


class LightFieldError(Exception):
    """Base class for all toolkit errors."""


class ManifestError(LightFieldError):
    """Malformed or unreadable light field manifest."""


class IncompleteGridError(ManifestError):
    """A view required by the angular grid is missing.

    Carries the offending (s, t) index in ``view``.
    """

    def __init__(self, view, message=None):
        self.view = view
        super().__init__(message or f"missing view (s={view[0]}, t={view[1]})")


class DimensionMismatchError(LightFieldError):
    """A view or map does not match the light field's dimensions."""


class InvalidDepthError(LightFieldError):
    """Depth map contains a non-positive or non-finite sample."""


class CoverageError(LightFieldError):
    """A synthetic scene leaves frame pixels uncovered in some view."""
