import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from qcomm_bounds.config import DEFAULT_RESTARTS
from qcomm_bounds.models.common import BoundRegime, MatrixClass

MAX_DIMENSION = 16


class OptConfig(BaseModel):
    """Parameters of one ratio maximization run."""
    model_config = ConfigDict(extra='forbid', frozen=True)

    n: int = Field(ge=1, le=MAX_DIMENSION)
    q: float
    matrix_class: MatrixClass = MatrixClass.GENERAL
    restarts: int = Field(default=DEFAULT_RESTARTS, ge=1)
    max_alternations: int = Field(default=500, ge=1)
    ratio_tol: float = Field(default=1e-11, gt=0)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        if not np.isfinite(v):
            raise ValueError(f'q must be finite, got {v}')
        return v

    @model_validator(mode='after')
    def validate_class_dimension(self):
        if self.matrix_class.traceless_a and self.n < 2:
            raise ValueError('Traceless classes require n >= 2')
        return self


class OptResult(BaseModel):
    """Best pair found across restarts, with convergence metadata."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    best_ratio: float
    A: np.ndarray
    B: np.ndarray
    alternations_used: int
    restart_index: int
    converged: bool
    converged_restarts: int = 0
    witness_ratio: float | None = None


class SweepRow(BaseModel):
    """One point of a figure: numerical maximum against the conjectured curve."""
    q: float
    n: int
    matrix_class: MatrixClass
    max_ratio: float
    conjectured_bound: float
    gap: float = 0.0
    converged_restarts: int = 0
    regime: BoundRegime

    @model_validator(mode='after')
    def compute_gap(self):
        self.gap = self.max_ratio - self.conjectured_bound
        return self

    def as_record(self) -> dict:
        """Flat row in CSV column order."""
        return {
            'q': self.q,
            'n': self.n,
            'class': self.matrix_class.value,
            'max_ratio': self.max_ratio,
            'conjectured_bound': self.conjectured_bound,
            'gap': self.gap,
            'converged_restarts': self.converged_restarts,
        }
