"""Pydantic request/response models for the fold service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class ServiceInfo(BaseModel):
    name: str
    version: str


class SolveRequest(BaseModel):
    aspect: float = 1.0
    constrained: bool = False
    with_oracle: bool = False
    oracle_n: int = Field(default=500, ge=100)


class SolveReport(BaseModel):
    """Optimal fold for one page; x_e = 1 + excess by construction."""

    aspect: float
    constrained: bool
    case: int
    a: float
    b: float
    excess: float
    x_e: float
    y_e: float
    regime: Optional[str] = None
    oracle_excess: Optional[float] = None


class CurveRequest(BaseModel):
    kind: Literal["eb", "transition", "phase", "summary"]
    samples: int = Field(default=201, ge=2)
    aspects: Optional[list[float]] = None       # transition
    a_values: Optional[list[float]] = None      # summary
    constrained: bool = False                   # summary
    from_aspect: float = 1.0                    # phase
    to_aspect: float = 1.5                      # phase


class RenderRequest(BaseModel):
    aspect: float = 1.0
    case: Literal[1, 2] = 2
    a: float
    b: float


class VerifyRequest(BaseModel):
    level: Literal["fast", "full"] = "fast"


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyReport(BaseModel):
    level: str
    passed: bool
    checks: list[CheckOutcome]


class CriticalReport(BaseModel):
    critical_aspect: float
    tol: float
    closed_form_value: float
    matches_closed_form: bool
