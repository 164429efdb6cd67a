"""Request and response models of the certificate service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

REPORT_VERSION = "v1"


class PsqRequest(BaseModel):
    p: int = Field(..., description="odd prime; degree of the certified subfield")
    budget: Optional[int] = Field(None, ge=1, description="prime-search value bound")


class Deg8Request(BaseModel):
    p: int = Field(..., description="prime congruent to 3 mod 8")


class MnDemoRequest(BaseModel):
    samples: int = Field(1000, ge=1, le=100_000)
    seed: int = 0


class ProfileCheckRequest(BaseModel):
    profile: dict
    extension: Optional[dict] = Field(
        None, description="local degrees of a candidate subfield, for containment")


class Report(BaseModel):
    """Envelope for every certificate the service emits."""

    kind: str
    version: str = REPORT_VERSION
    all_pass: bool
    payload: dict
