"""
Built-in Scenario Module

Named clouds for the reference examples, with the free parameters
(r₊, r₋, D, m, n, ε, p) exposed as options.
"""

from enum import Enum
from typing import Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.common.errors import ParameterDomainError
from src.common.types import BKParams, ComplexKind, LpExponent
from src.cli.cloud_spec import CloudSpec, CSideSpec, YSideSpec
from src.metric.finite_metric import star_metric


class ScenarioId(Enum):
    CP_RAY = "cp-ray"
    CP_HELLINGER_DIM2 = "cp-hellinger-dim2"
    K22 = "k22"
    KMN = "kmn"
    MIXED_LOOP = "mixed-loop"
    CP_CECH_INTRINSIC_VS_AMBIENT = "cp-cech-intrinsic-vs-ambient"
    ANCHOR_SEPARATION = "anchor-separation"
    KSW_SCALAR = "ksw-scalar"
    ATTACHMENT = "attachment"


# scenarios that report on sequences or grids rather than on a single cloud
REPORT_ONLY = {ScenarioId.ANCHOR_SEPARATION, ScenarioId.KSW_SCALAR}


class ScenarioOptions(BaseModel):
    """
    Free parameters. The loop defaults r₊ = r₋ = 0.95, D = 1.9 satisfy
    D <= r₊ + r₋ and max{1, r±} <= 1.5 < min{2, D}.
    """
    model_config = ConfigDict(frozen=True)

    p: LpExponent = Field(default_factory=LpExponent.inf)
    r_plus: float = Field(default=0.95, gt=0.0)
    r_minus: float = Field(default=0.95, gt=0.0)
    D: float = Field(default=1.9, gt=0.0)
    m: int = Field(default=2, ge=1)
    n: int = Field(default=2, ge=1)
    epsilon: float = Field(default=0.1, gt=0.0)
    n_max: int = Field(default=256, ge=1)

    @field_validator("p", mode="before")
    @classmethod
    def _coerce_p(cls, v):
        return v if isinstance(v, (LpExponent, dict)) else LpExponent.parse(v)


class ScenarioDefaults(BaseModel):
    t_grid: List[float]
    complexes: List[ComplexKind]
    description: str


DEFAULTS: Dict[ScenarioId, ScenarioDefaults] = {
    ScenarioId.CP_RAY: ScenarioDefaults(
        t_grid=[0.5, 0.99, 1.0, 1.5, 1.99, 2.0, 3.0], complexes=[ComplexKind.RIPS],
        description="Bures ray cloud {x0, x1, x4}: discrete, then the path, then the 2-simplex",
    ),
    ScenarioId.CP_HELLINGER_DIM2: ScenarioDefaults(
        t_grid=[0.5, 1.0, 1.2, 1.5], complexes=[ComplexKind.RIPS],
        description="Hellinger orthant points (1,0), (0,1), (1,1): thresholds 1 and √2, no H1",
    ),
    ScenarioId.K22: ScenarioDefaults(
        t_grid=[1.0], complexes=[ComplexKind.RIPS],
        description="two CP points of radius 1 against two Y points: the 4-cycle K2,2",
    ),
    ScenarioId.KMN: ScenarioDefaults(
        t_grid=[1.0], complexes=[ComplexKind.RIPS],
        description="m orthant unit vectors against n Y points: the graph K_{m,n}",
    ),
    ScenarioId.MIXED_LOOP: ScenarioDefaults(
        t_grid=[1.5], complexes=[ComplexKind.RIPS, ComplexKind.CECH_AMBIENT],
        description="{x0, x4, y+, y-} with the anchor x1 removed: Rips loop, contractible ambient Čech",
    ),
    ScenarioId.CP_CECH_INTRINSIC_VS_AMBIENT: ScenarioDefaults(
        t_grid=[0.4, 0.5, 0.6, 0.99, 1.0], complexes=[ComplexKind.CECH_INTRINSIC, ComplexKind.CECH_AMBIENT],
        description="ray cloud {x0, x1, x4}: intrinsic Čech jumps at 1, ambient at 1/2 and 1",
    ),
    ScenarioId.ANCHOR_SEPARATION: ScenarioDefaults(
        t_grid=[], complexes=[],
        description="scalar sequences ψ_n = i/n and χ_n = φ + i/n under two anchors",
    ),
    ScenarioId.KSW_SCALAR: ScenarioDefaults(
        t_grid=[], complexes=[],
        description="KSW sandwich on a 20×20 grid of scalar and ray pairs",
    ),
    ScenarioId.ATTACHMENT: ScenarioDefaults(
        t_grid=[0.5, 1.0, 2.0], complexes=[ComplexKind.RIPS],
        description="ray cloud with Y radii <= ε: distance to the Y side tends to r_C",
    ),
}


def loop_y_side(r_plus: float, r_minus: float, D: float) -> YSideSpec:
    """{∗, y+, y−} with d(∗, y±) = r± and d(y+, y−) = D"""
    return YSideSpec(
        distances=[[0.0, r_plus, r_minus], [r_plus, 0.0, D], [r_minus, D, 0.0]],
        labels=["*", "y+", "y-"],
    )


def star_y_side(radii: List[float], prefix: str = "y") -> YSideSpec:
    pointed = star_metric(radii, [f"{prefix}{i}" for i in range(1, len(radii) + 1)])
    return YSideSpec(distances=pointed.metric.dist.tolist(), labels=list(pointed.metric.labels))


def build_scenario(sid: Union[ScenarioId, str], options: Optional[ScenarioOptions] = None) -> CloudSpec:
    """The cloud of a scenario; report-only scenarios have none"""
    sid = ScenarioId(sid)
    options = options or ScenarioOptions()
    params = BKParams(p=options.p)

    if sid in (ScenarioId.CP_RAY, ScenarioId.CP_CECH_INTRINSIC_VS_AMBIENT):
        return CloudSpec(params=params, cSide=CSideSpec(model="ray", points=[0, 1, 4], anchor=1))

    if sid == ScenarioId.CP_HELLINGER_DIM2:
        return CloudSpec(
            params=params,
            cSide=CSideSpec(model="hellinger", points=[[0, 0], [1, 0], [0, 1], [1, 1]], anchor=0,
                            labels=["theta", "z1", "z2", "z3"]),
            includeAnchorAsVertex=False,
        )

    if sid in (ScenarioId.K22, ScenarioId.MIXED_LOOP):
        return CloudSpec(
            params=params,
            cSide=CSideSpec(model="ray", points=[0, 1, 4], anchor=1),
            ySide=loop_y_side(options.r_plus, options.r_minus, options.D),
            includeAnchorAsVertex=False,
        )

    if sid == ScenarioId.KMN:
        basis = np.eye(options.m).tolist()
        return CloudSpec(
            params=params,
            cSide=CSideSpec(model="hellinger", points=[[0.0] * options.m] + basis, anchor=0,
                            labels=["theta"] + [f"e{i}" for i in range(1, options.m + 1)]),
            ySide=star_y_side([options.r_plus] * options.n),
            includeAnchorAsVertex=False,
        )

    if sid == ScenarioId.ATTACHMENT:
        radii = [options.epsilon * (k + 1) / 3.0 for k in range(3)]
        return CloudSpec(
            params=params,
            cSide=CSideSpec(model="ray", points=[0, 1, 4], anchor=1),
            ySide=star_y_side(radii),
            includeAnchorAsVertex=False,
        )

    raise ParameterDomainError(f"scenario {sid.value} reports on sequences and has no single cloud")
