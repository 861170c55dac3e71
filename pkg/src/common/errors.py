"""
Error types raised by the library layers.

The CLI is the only place that turns these into exit codes.
"""

from typing import Any, Optional, Sequence, Tuple


class WedgeError(Exception):
    """Base class for all toolkit errors"""


class ParameterDomainError(WedgeError):
    """λ, α, p or a scale outside its admissible domain"""


class MetricValidationError(WedgeError):
    """A distance table violates a metric axiom"""

    def __init__(self, message: str, indices: Optional[Tuple[int, ...]] = None, field: Optional[str] = None):
        super().__init__(message)
        self.indices = indices
        self.field = field


class CloudMismatchError(WedgeError):
    """Two clouds that should differ only in their anchor differ elsewhere"""


class SolverNonConvergence(WedgeError):
    """The orthant witness solver hit its iteration cap undecided"""

    def __init__(self, message: str, centers: Sequence[Any] = (), radii: Sequence[float] = ()):
        super().__init__(message)
        self.centers = list(centers)
        self.radii = list(radii)


class AuditFailure(WedgeError):
    """A brute-force cross-check disagreed with a structural formula"""

    def __init__(self, message: str, simplex: Optional[Tuple[int, ...]] = None, scale: Optional[float] = None):
        super().__init__(message)
        self.simplex = simplex
        self.scale = scale
