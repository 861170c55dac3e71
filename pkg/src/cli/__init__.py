"""
CLI Module
CloudSpec ingestion, built-in scenarios, run reports and the acceptance catalog
"""

from .cloud_spec import CloudSpec, CSideSpec, YSideSpec
from .scenarios import DEFAULTS, ScenarioId, ScenarioOptions, build_scenario
from .acceptance import CATALOG, AcceptanceRow, RowResult, random_cloud, run_catalog
from .report import emit, run_document
from .main import build_parser, main

__all__ = [
    "CloudSpec",
    "CSideSpec",
    "YSideSpec",
    "DEFAULTS",
    "ScenarioId",
    "ScenarioOptions",
    "build_scenario",
    "CATALOG",
    "AcceptanceRow",
    "RowResult",
    "random_cloud",
    "run_catalog",
    "emit",
    "run_document",
    "build_parser",
    "main",
]
