import numpy as np
import pytest

from qcomm_bounds.matcore import make_rng
from qcomm_bounds.models import MatrixClass, OptConfig


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator shared by randomized tests."""
    return make_rng(1234)


@pytest.fixture
def small_config():
    """OptConfig factory with few restarts, for fast optimizer runs."""
    def make(n: int = 2, q: float = 0.5, matrix_class: MatrixClass = MatrixClass.GENERAL,
             restarts: int = 4, seed: int = 0) -> OptConfig:
        return OptConfig(n=n, q=q, matrix_class=matrix_class, restarts=restarts, seed=seed)
    return make
