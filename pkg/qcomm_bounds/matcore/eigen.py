"""Hermitian eigensolvers and the spectra derived from them.

Two backends satisfy the same contract (descending eigenvalues, unitary
eigenvectors in columns): a cyclic complex Jacobi sweep, which is the reference
implementation, and LAPACK through ``numpy.linalg.eigh``, which the optimizer uses
by default.
"""
import logging
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike

from qcomm_bounds.config import EIGEN_BACKEND
from qcomm_bounds.exceptions import ConvergenceError, NonHermitianError
from qcomm_bounds.matcore.linalg import as_cmatrix, frobenius_norm_sq
from qcomm_bounds.models.common import EigenBackend

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-12
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 60


def _off_norm(H: np.ndarray) -> float:
    off = H - np.diag(np.diag(H))
    return float(np.sqrt(frobenius_norm_sq(off)))


def jacobi_eigen(H: np.ndarray, max_sweeps: int = JACOBI_MAX_SWEEPS,
                 tol: float = JACOBI_OFF_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi for a Hermitian matrix; returns unsorted (values, vectors).

    Each rotation first removes the phase of H[p, k] with a diagonal unitary and then
    applies the real symmetric Schur rotation to the resulting 2 x 2 block.

    Raises:
        ConvergenceError: If the off-diagonal norm is still above
            ``tol * ||H||_F`` after ``max_sweeps`` sweeps.
    """
    H = np.array(H, dtype=np.complex128)
    n = H.shape[0]
    V = np.eye(n, dtype=np.complex128)
    threshold = tol * np.sqrt(frobenius_norm_sq(H))

    for sweep in range(max_sweeps + 1):
        if _off_norm(H) <= threshold:
            logger.debug(f'Jacobi converged after {sweep} sweeps (n={n})')
            return np.real(np.diag(H)).copy(), V
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for k in range(p + 1, n):
                b = H[p, k]
                beta = abs(b)
                if beta == 0.0:
                    continue
                phase = b / beta
                a, d = H[p, p].real, H[k, k].real
                tau = (d - a) / (2.0 * beta)
                t = 1.0 / (abs(tau) + np.sqrt(1.0 + tau * tau)) if tau != 0.0 else 1.0
                if tau < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # U = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                U = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=np.complex128)
                idx = [p, k]
                H[:, idx] = H[:, idx] @ U
                H[idx, :] = U.conj().T @ H[idx, :]
                H[p, k] = H[k, p] = 0.0
                H[p, p], H[k, k] = H[p, p].real, H[k, k].real
                V[:, idx] = V[:, idx] @ U

    raise ConvergenceError(
        f'Jacobi eigensolver did not converge after {max_sweeps} sweeps (n={n})',
        iterations=max_sweeps,
    )


def hermitian_eigen(H: ArrayLike, backend: EigenBackend | str | None = None) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix.

    Args:
        H (ArrayLike): Hermitian matrix, ||H - H^dagger||_F <= 1e-12 ||H||_F.
        backend (EigenBackend | str | None, optional): Solver to use.
            Defaults to QCOMM_EIGEN_BACKEND.

    Returns:
        Tuple[np.ndarray, np.ndarray]: Real eigenvalues in descending order and the
            unitary matrix whose columns are the matching eigenvectors.
    """
    H = as_cmatrix(H)
    backend = EigenBackend.from_str(backend or EIGEN_BACKEND)
    scale = np.sqrt(frobenius_norm_sq(H))
    asym = np.sqrt(frobenius_norm_sq(H - H.conj().T))
    if asym > HERMITIAN_TOL * scale:
        raise NonHermitianError(f'Matrix is not Hermitian: ||H - H^dagger||_F = {asym:.3e}')
    H = 0.5 * (H + H.conj().T)

    if backend is EigenBackend.JACOBI:
        values, vectors = jacobi_eigen(H)
    else:
        try:
            values, vectors = np.linalg.eigh(H)
        except np.linalg.LinAlgError as e:
            raise ConvergenceError(f'LAPACK eigensolver failed: {e}') from e

    # stable sort keeps the solver's own order among ties
    order = np.argsort(-values, kind='stable')
    return values[order], vectors[:, order]


def singular_values(A: ArrayLike, backend: EigenBackend | str | None = None) -> np.ndarray:
    """Singular values of A, descending, from the eigenvalues of A^dagger A."""
    A = as_cmatrix(A)
    values, _ = hermitian_eigen(A.conj().T @ A, backend=backend)
    return np.sqrt(np.clip(values, 0.0, None))


def operator_norm(A: ArrayLike) -> float:
    """Spectral norm s_1."""
    return float(singular_values(A)[0])


def kyfan22_norm_sq(A: ArrayLike) -> float:
    """s_1^2 + s_2^2, with s_2 = 0 for 1 x 1 input."""
    s = singular_values(A)
    return float(np.sum(s[:2] ** 2))
