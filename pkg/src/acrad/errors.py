"""Exception hierarchy shared across the package.

Plain argument/precondition violations raise :class:`ValueError`; the
classes below cover geometry, parsing and numerical failure modes that
callers need to tell apart (e.g. a frequency sweep records singular
frequencies and continues).
"""


class AcradError(Exception):
    """Base class for package-specific errors."""


class MeshParseError(AcradError):
    """Mesh file could not be parsed. Carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MeshInvariantError(AcradError):
    """A mesh violates a structural invariant (bad index, orphan edge, ...)."""


class GeometryError(AcradError):
    """Generated geometry is invalid (inverted element, loop not inside, ...)."""


class DegenerateElementError(AcradError):
    """Element-level matrix requested for a degenerate triangle or edge."""


class SingularMatrixError(AcradError):
    """A factorization failed or the reciprocal condition fell below threshold."""

    def __init__(self, message, frequency_hz=None):
        if frequency_hz is not None:
            message = f"{message} (f = {frequency_hz:.6g} Hz)"
        super().__init__(message)
        self.frequency_hz = frequency_hz


class SingularInteriorError(SingularMatrixError):
    """Interior block of a condensation is singular (interior resonance)."""


class SingularCouplingError(SingularMatrixError):
    """Boundary-mass or inter-loop coupling block is singular."""


class SingularSystemError(SingularMatrixError):
    """Coupled radiation system is singular at this frequency."""


class DegenerateBasisError(AcradError):
    """Selected eigenvector basis is numerically rank deficient."""


class ProbeOutsideRegionError(AcradError):
    """A probe point lies outside the meshed region."""


class ConfigError(AcradError):
    """Run configuration is invalid. Carries the offending key path."""

    def __init__(self, message, key=None):
        if key is not None:
            message = f"{key}: {message}"
        super().__init__(message)
        self.key = key


class CacheError(AcradError):
    """Impedance cache is unreadable, corrupt, or checksum-mismatched."""
