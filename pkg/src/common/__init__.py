"""Common types, configuration and errors for the BK wedge toolkit"""

from .types import (
    Side,
    ComplexKind,
    LpExponent,
    BKParams,
    WedgePoint,
    INF_LITERAL,
)
from .errors import (
    WedgeError,
    ParameterDomainError,
    MetricValidationError,
    CloudMismatchError,
    SolverNonConvergence,
    AuditFailure,
)
from .config import SolverConfiguration, ConfigLoader, get_solver_config, set_solver_config, log

__all__ = [
    "Side",
    "ComplexKind",
    "LpExponent",
    "BKParams",
    "WedgePoint",
    "INF_LITERAL",
    "WedgeError",
    "ParameterDomainError",
    "MetricValidationError",
    "CloudMismatchError",
    "SolverNonConvergence",
    "AuditFailure",
    "SolverConfiguration",
    "ConfigLoader",
    "get_solver_config",
    "set_solver_config",
    "log",
]
