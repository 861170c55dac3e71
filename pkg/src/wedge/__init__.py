"""
Wedge Complex Module
Structural construction of Rips and Čech complexes on mixed clouds, with audits
"""

from .radial import RadialProfile, MixedSimplexCertificate, radial_profile, local_sides, split_simplex
from .rips_wedge import mixed_rips_criterion, rips_wedge
from .cech_wedge import cech_mixed_criterion, cech_wedge_ambient, default_bindings, residual_radius
from .audits import AuditRow, DecompositionReport, decomposition_audit, attachment_audit

__all__ = [
    "RadialProfile",
    "MixedSimplexCertificate",
    "radial_profile",
    "local_sides",
    "split_simplex",
    "mixed_rips_criterion",
    "rips_wedge",
    "cech_mixed_criterion",
    "cech_wedge_ambient",
    "default_bindings",
    "residual_radius",
    "AuditRow",
    "DecompositionReport",
    "decomposition_audit",
    "attachment_audit",
]
