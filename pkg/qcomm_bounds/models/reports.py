import math
from datetime import datetime
from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from qcomm_bounds.models.common import BoundRegime


class BoundValue(BaseModel):
    """Coefficient c with ||[A,B]_q||^2 <= c ||A||^2 ||B||^2, tagged with its regime."""
    model_config = ConfigDict(frozen=True)

    coefficient: float
    regime: BoundRegime

    @field_validator('coefficient')
    @classmethod
    def validate_coefficient(cls, v):
        if not math.isfinite(v) or v < 1.0 - 1e-12:
            raise ValueError(f'Bound coefficient must be finite and >= 1, got {v}')
        return v


class WitnessPair(BaseModel):
    """A concrete (A, B, q) with the ratio it is known to attain."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: np.ndarray
    B: np.ndarray
    q: float
    expected_ratio: float
    label: str


class CheckReport(BaseModel):
    """Outcome of one verification check; positive worst_violation means the inequality failed."""
    name: str
    trials: int = Field(ge=0)
    worst_violation: float
    tolerance: float = Field(gt=0)
    passed: bool = False
    details: str = ''

    @model_validator(mode='after')
    def compute_passed(self):
        self.passed = bool(self.worst_violation <= self.tolerance)
        return self

    def summary_line(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        return (
            f'{status} {self.name} trials={self.trials} '
            f'worst_violation={self.worst_violation:.3e} tol={self.tolerance:.1e} {self.details}'
        ).rstrip()


class RunManifest(BaseModel):
    """Parameter echo written next to every CLI output."""
    command: str
    config: Dict[str, Any]
    artifact_version: str
    seed: int | None = None
    started: datetime
    finished: datetime | None = None
    output_paths: List[str] = Field(default_factory=list)
