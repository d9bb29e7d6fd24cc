"""Exception types raised across the package."""


class ConcurrenceError(ValueError):
    """Base class for every domain error raised by this package."""


class NotPositive(ConcurrenceError):
    """Matrix fails the density-matrix checks (PSD, Hermitian, unit trace)."""


class NotXState(ConcurrenceError):
    """Matrix has weight outside the diagonal/anti-diagonal X pattern."""


class BadKeepSet(ConcurrenceError):
    """Partial-trace keep set is not exactly one A-mode and one B-mode."""


class BadSpec(ConcurrenceError):
    """Thermal or frame parameters are inconsistent."""


class BadParam(ConcurrenceError):
    """Parameter outside its admissible range."""


class DegenerateQuadratic(ConcurrenceError):
    """Quadratic with vanishing leading and linear coefficients."""


class NoDeadZone(ConcurrenceError):
    """Bit-flip threshold quadratic has no admissible root."""
