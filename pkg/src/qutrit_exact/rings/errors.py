"""Error types shared by the exact-arithmetic layers."""

from __future__ import annotations

__all__ = ["RingError", "NotRealError", "NotInAError", "KTooSmallError"]


class RingError(ValueError):
    """Base class for ring-membership and conversion failures."""

    code = "RING_ERROR"

    def __init__(self, message: str = ""):
        text = self.code if not message else f"{self.code}: {message}"
        super().__init__(text)


class NotRealError(RingError):
    """Raised when a real-ring operation receives a value with nonzero imaginary part."""

    code = "NOT_REAL"


class NotInAError(RingError):
    """Raised when a real value lies outside the alpha-local ring."""

    code = "NOT_IN_A"


class KTooSmallError(RingError):
    """Raised when k-th residue is requested below the least denominator exponent."""

    code = "K_TOO_SMALL"
