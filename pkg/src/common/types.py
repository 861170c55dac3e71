"""
Core Domain Types for the BK wedge toolkit
Parameter and point types shared by the metric, complex and CLI layers.
"""

import math
from enum import Enum
from typing import Union, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator


# =============================================================================
# VOCABULARIES
# =============================================================================

class Side(Enum):
    """Component of the wedge a point lives in"""
    C = "C"  # completely positive side, basepoint = anchor θ
    Y = "Y"  # collapsed non-CP side, basepoint = ∗


class ComplexKind(Enum):
    RIPS = "rips"
    CECH_INTRINSIC = "cech-intrinsic"
    CECH_AMBIENT = "cech-ambient"


# =============================================================================
# BK PARAMETERS
# =============================================================================

INF_LITERAL = "inf"


class LpExponent(BaseModel):
    """
    Exponent p of the ℓp combination rule.

    Either a real p >= 1 or the symbol INF. INF is kept symbolic and never
    approximated by a large finite p.
    """
    model_config = ConfigDict(frozen=True)

    value: Union[float, Literal["inf"]]

    @field_validator("value", mode="before")
    @classmethod
    def _coerce(cls, v):
        if isinstance(v, str):
            if v.strip().lower() in ("inf", "infinity", "∞"):
                return INF_LITERAL
            v = float(v)
        if isinstance(v, (int, float)):
            if math.isinf(v) and v > 0:
                return INF_LITERAL
            if math.isnan(v) or v < 1.0:
                raise ValueError(f"p must be >= 1 or 'inf', got {v}")
            return float(v)
        raise ValueError(f"unsupported exponent {v!r}")

    @classmethod
    def parse(cls, raw: Union[str, float, int, "LpExponent"]) -> "LpExponent":
        if isinstance(raw, LpExponent):
            return raw
        return cls(value=raw)

    @classmethod
    def inf(cls) -> "LpExponent":
        return cls(value=INF_LITERAL)

    @property
    def is_inf(self) -> bool:
        return self.value == INF_LITERAL

    @property
    def reciprocal(self) -> float:
        """1/p with 1/∞ = 0"""
        return 0.0 if self.is_inf else 1.0 / float(self.value)

    def to_json(self) -> Union[float, str]:
        return INF_LITERAL if self.is_inf else float(self.value)

    def __str__(self) -> str:
        return INF_LITERAL if self.is_inf else f"{float(self.value):g}"


class BKParams(BaseModel):
    """Scale λ, snowflake exponent α and gluing exponent p"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(default=1.0, gt=0.0, alias="lambda")
    alpha: float = Field(default=1.0, gt=0.0, le=1.0)
    p: LpExponent = Field(default_factory=LpExponent.inf)

    @field_validator("p", mode="before")
    @classmethod
    def _coerce_p(cls, v):
        if isinstance(v, LpExponent):
            return v
        if isinstance(v, dict):
            return v
        return LpExponent.parse(v)

    def to_json(self) -> dict:
        return {"lambda": self.lambda_, "alpha": self.alpha, "p": self.p.to_json()}


# =============================================================================
# WEDGE POINTS
# =============================================================================

class WedgePoint(BaseModel):
    """A vertex of one wedge component, addressed by side and index"""
    model_config = ConfigDict(frozen=True)

    side: Side
    index: int = Field(ge=0)

    @classmethod
    def c(cls, index: int) -> "WedgePoint":
        return cls(side=Side.C, index=index)

    @classmethod
    def y(cls, index: int) -> "WedgePoint":
        return cls(side=Side.Y, index=index)
