"""
Solver Configuration Module

Numerical tolerances and caps, overridable from a JSON file and the
environment (BK_SOLVER_TOL, BK_MAX_ITER).
"""

import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv


@dataclass(frozen=True)
class SolverConfiguration:
    """
    Runtime knobs for metric validation, complex construction and the
    orthant witness solver.
    """
    solver_tol: float = 1e-9
    max_iter: int = 100_000
    metric_tol: float = 1e-12
    scale_tol: float = 1e-12
    max_dim_cap: int = 7
    max_simplices: int = 2 ** 14
    verbose: bool = True


class ConfigLoader:
    """
    Loads configuration from disk, then applies environment overrides.
    """
    DEFAULT_PATH = "bk_wedge.json"

    @staticmethod
    def load(path: str = DEFAULT_PATH) -> SolverConfiguration:
        load_dotenv()
        config = SolverConfiguration()

        if os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as f:
                    data = json.load(f)
                known = {k: v for k, v in data.items() if k in SolverConfiguration.__dataclass_fields__}
                config = replace(config, **known)
                print(f"[ConfigLoader] Loaded solver settings from {path}", file=sys.stderr)
            except (OSError, ValueError, TypeError) as e:
                print(f"[ConfigLoader] Failed to load config: {e}", file=sys.stderr)

        env_tol = os.getenv("BK_SOLVER_TOL")
        if env_tol:
            try:
                config = replace(config, solver_tol=float(env_tol))
            except ValueError:
                print(f"[ConfigLoader] Ignoring malformed BK_SOLVER_TOL={env_tol!r}", file=sys.stderr)

        env_iter = os.getenv("BK_MAX_ITER")
        if env_iter:
            try:
                config = replace(config, max_iter=int(env_iter))
            except ValueError:
                print(f"[ConfigLoader] Ignoring malformed BK_MAX_ITER={env_iter!r}", file=sys.stderr)

        return config


_config: Optional[SolverConfiguration] = None


def get_solver_config() -> SolverConfiguration:
    """Get or create the process-wide configuration"""
    global _config
    if _config is None:
        _config = ConfigLoader.load()
    return _config


def set_solver_config(config: SolverConfiguration) -> None:
    """Install a configuration (CLI flags, tests)"""
    global _config
    _config = config


def log(component: str, message: str) -> None:
    """Bracket-tagged status line on stderr, silenced when verbose is off"""
    if get_solver_config().verbose:
        print(f"[{component}] {message}", file=sys.stderr)
