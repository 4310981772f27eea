"""Dense complex matrix kernel: q-commutator, norms, Kronecker products, vectorization.

Matrices are square ``complex128`` numpy arrays. Vectorization stacks columns, so
component ``j * n + i`` of ``vectorize(B)`` is ``B[i, j]``; this is the convention
under which ``vectorize(A @ B - q * B @ A) == (I (x) A - q A^T (x) I) @ vectorize(B)``.
"""
import numpy as np
from numpy.typing import ArrayLike

from qcomm_bounds.exceptions import DimensionMismatchError


def as_cmatrix(X: ArrayLike) -> np.ndarray:
    """Coerce input to a finite, square complex128 matrix.

    Raises:
        ValueError: If X is not square, is empty, or holds NaN/Inf.
    """
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim != 2 or X.shape[0] != X.shape[1] or X.shape[0] < 1:
        raise ValueError(f'Expected a non-empty square matrix, got shape {X.shape}')
    if not np.all(np.isfinite(X)):
        raise ValueError('Matrix entries must be finite')
    return X


def _check_same_dimension(A: np.ndarray, B: np.ndarray):
    if A.shape != B.shape:
        raise DimensionMismatchError(f'Dimension mismatch: {A.shape} vs {B.shape}')


def q_commutator(A: ArrayLike, B: ArrayLike, q: float) -> np.ndarray:
    """Return [A, B]_q = AB - qBA."""
    A, B = as_cmatrix(A), as_cmatrix(B)
    _check_same_dimension(A, B)
    return A @ B - q * (B @ A)


def frobenius_norm_sq(A: ArrayLike) -> float:
    """Return tr(AA^dagger), the sum of squared moduli of the entries."""
    A = np.asarray(A, dtype=np.complex128)
    return float(np.sum(A.real ** 2 + A.imag ** 2))


def kron(X: ArrayLike, Y: ArrayLike) -> np.ndarray:
    """Kronecker product with block (i, j) equal to X[i, j] * Y."""
    return np.kron(as_cmatrix(X), as_cmatrix(Y))


def vectorize(B: ArrayLike) -> np.ndarray:
    """Column-stack B into a vector of length n^2."""
    return as_cmatrix(B).flatten(order='F')


def devectorize(v: ArrayLike) -> np.ndarray:
    """Inverse of :func:`vectorize`.

    Raises:
        DimensionMismatchError: If the length of v is not a perfect square.
    """
    v = np.asarray(v, dtype=np.complex128).ravel()
    n = int(round(np.sqrt(v.size)))
    if n < 1 or n * n != v.size:
        raise DimensionMismatchError(f'Vector of length {v.size} is not a vectorized square matrix')
    return v.reshape((n, n), order='F')


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    """The n x n matrix with a single 1 at (i, j), zero-based."""
    E = np.zeros((n, n), dtype=np.complex128)
    E[i, j] = 1.0
    return E


def embed(X: ArrayLike, n: int) -> np.ndarray:
    """Pad X with zeros into the upper-left block of an n x n matrix."""
    X = as_cmatrix(X)
    m = X.shape[0]
    if n < m:
        raise DimensionMismatchError(f'Cannot embed a {m}x{m} matrix into {n}x{n}')
    out = np.zeros((n, n), dtype=np.complex128)
    out[:m, :m] = X
    return out


# Pauli matrices, in sigma_1, sigma_2, sigma_3 order
PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=np.complex128)
