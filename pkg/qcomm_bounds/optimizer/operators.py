"""Vectorized forms of the q-commutator as a linear map in either slot."""
import numpy as np
from numpy.typing import ArrayLike

from qcomm_bounds.matcore import as_cmatrix, identity, kron, vectorize


def build_MA(A: ArrayLike, q: float) -> np.ndarray:
    """M_A = I (x) A - q A^T (x) I, so that M_A vec(B) = vec([A, B]_q)."""
    A = as_cmatrix(A)
    eye = identity(A.shape[0])
    return kron(eye, A) - q * kron(A.T, eye)


def build_NB(B: ArrayLike, q: float) -> np.ndarray:
    """N_B = B^T (x) I - q I (x) B, so that N_B vec(A) = vec([A, B]_q)."""
    B = as_cmatrix(B)
    eye = identity(B.shape[0])
    return kron(B.T, eye) - q * kron(eye, B)


def trace_projector(n: int) -> np.ndarray:
    """P = I - v v^dagger / n with v = vec(I); P vec(A) = vec(A - tr(A)/n I)."""
    v = vectorize(identity(n))
    return np.eye(n * n, dtype=np.complex128) - np.outer(v, v.conj()) / n


def diagonal_indices(n: int) -> np.ndarray:
    """Positions of the diagonal entries inside vec(A)."""
    return np.arange(n) * (n + 1)
