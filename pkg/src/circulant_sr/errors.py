"""Exception hierarchy shared by the library and the CLI."""


class CirculantError(Exception):
    """Base class for all library errors."""


class SpecError(CirculantError, ValueError):
    """Invalid circulant parameters or malformed input."""


class ResourceLimitError(CirculantError):
    """A configured size cap was exceeded."""


class FaceLimitError(ResourceLimitError):
    pass


class BettiCapError(ResourceLimitError):
    pass


class InternalConsistencyError(CirculantError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
