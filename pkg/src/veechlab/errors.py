"""Exceptions shared across the package."""


class VeechLabError(Exception):
    """Base class for all package errors."""


class InvalidSurface(VeechLabError):
    """Polygon/gluing data does not define a translation surface."""


class BoundExceeded(VeechLabError):
    """A separatrix left the length cap before closing up.

    The direction is not certified periodic within the cap; callers may
    retry with a larger cap.
    """

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class IntransitiveMonodromy(VeechLabError):
    """Monodromy image does not act transitively on the fiber."""


class CapExceeded(VeechLabError):
    """Coset enumeration exceeded the configured coset cap."""


class NonChainError(VeechLabError):
    """Holonomy input is not a valid chain of edge segments."""


class VerificationFailure(VeechLabError):
    """A structural verification failed; carries the offending witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
