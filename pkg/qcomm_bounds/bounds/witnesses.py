"""The ratio functional and the concrete pairs that attain or violate bounds."""
import logging
from typing import List, Tuple

import numpy as np
from numpy.typing import ArrayLike

from qcomm_bounds.bounds.formulas import f_eval, g, q_crossover, t_max
from qcomm_bounds.exceptions import RegimeError, ZeroMatrixError
from qcomm_bounds.matcore import embed, frobenius_norm_sq, matrix_unit, q_commutator
from qcomm_bounds.models import MatrixClass, WitnessPair

logger = logging.getLogger(__name__)

ZERO_NORM = 1e-300


def ratio(A: ArrayLike, B: ArrayLike, q: float) -> float:
    """||[A,B]_q||^2 / (||A||^2 ||B||^2).

    Raises:
        ZeroMatrixError: If A or B has Frobenius norm <= 1e-300.
    """
    na, nb = frobenius_norm_sq(A), frobenius_norm_sq(B)
    if np.sqrt(na) <= ZERO_NORM or np.sqrt(nb) <= ZERO_NORM:
        raise ZeroMatrixError('Ratio is undefined for a zero matrix')
    return frobenius_norm_sq(q_commutator(A, B, q)) / (na * nb)


def normal_commutator_norm_sq(d: ArrayLike, B: ArrayLike, q: float) -> float | np.ndarray:
    """||[diag(d), B]_q||^2 = sum_ij |b_ij|^2 |d_i - q d_j|^2.

    Broadcasts over leading axes: d of shape (..., n) with B of shape (..., n, n)
    returns an array of shape (...).
    """
    d = np.asarray(d, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    weights = np.abs(d[..., :, None] - q * d[..., None, :]) ** 2
    total = np.sum(np.abs(B) ** 2 * weights, axis=(-2, -1))
    return float(total) if total.ndim == 0 else total


def f_family_pair(q: float, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """A = [[q, sqrt t], [0, -1]], B = [[q, 0], [-sqrt t, -1]]."""
    if q <= 0 or t < 0:
        raise RegimeError(f'f-family requires q > 0 and t >= 0, got q={q}, t={t}')
    s = np.sqrt(t)
    A = np.array([[q, s], [0.0, -1.0]], dtype=np.complex128)
    B = np.array([[q, 0.0], [-s, -1.0]], dtype=np.complex128)
    return A, B


def f_family_commutator(q: float, t: float) -> np.ndarray:
    """Closed form of [A,B]_q for the f-family pair."""
    s = np.sqrt(t)
    return np.array([
        [q * q * (1 - q) - t, -(1 + q * q) * s],
        [(1 + q * q) * s, q * t + 1 - q],
    ], dtype=np.complex128)


def kyfan_pair(n: int, q: float) -> WitnessPair:
    """A = diag(1, -q, 0, ...), B = E_12; ratio 1+q^2 with A normal and tr B = 0."""
    if n < 2:
        raise RegimeError(f'Ky Fan witness requires n >= 2, got n={n}')
    A = np.zeros((n, n), dtype=np.complex128)
    A[0, 0], A[1, 1] = 1.0, -q
    return WitnessPair(A=A, B=matrix_unit(n, 0, 1), q=q, expected_ratio=1.0 + q * q, label='kyfan')


def traceless_a_pair(n: int, q: float) -> WitnessPair:
    """A = E_12, B = diag(-q, 1, 0, ...); ratio 1+q^2 with A traceless."""
    if n < 2:
        raise RegimeError(f'Traceless witness requires n >= 2, got n={n}')
    B = np.zeros((n, n), dtype=np.complex128)
    B[0, 0], B[1, 1] = -q, 1.0
    return WitnessPair(A=matrix_unit(n, 0, 1), B=B, q=q, expected_ratio=1.0 + q * q, label='traceless-a')


def traceless_both_pair(n: int, q: float) -> WitnessPair:
    """A = E_12, B = E_21; [A,B]_q = E_11 - q E_22, ratio 1+q^2 with A and B traceless."""
    if n < 2:
        raise RegimeError(f'Traceless witness requires n >= 2, got n={n}')
    return WitnessPair(
        A=matrix_unit(n, 0, 1), B=matrix_unit(n, 1, 0), q=q, expected_ratio=1.0 + q * q, label='traceless-both',
    )


def one_sided_traceless_pair(n: int, q: float) -> WitnessPair:
    """A = diag(n-1, -1, ..., -1), B = E_11; ratio (1-q)^2 (n-1)/n.

    Only A is traceless. For n >= 3 this exceeds max(g(n)(1-q)^2, 1+q^2) on a
    neighbourhood of q = -1, so the traceless bound does not hold with B unconstrained.
    """
    if n < 2:
        raise RegimeError(f'Traceless witness requires n >= 2, got n={n}')
    d = -np.ones(n, dtype=np.complex128)
    d[0] = n - 1
    return WitnessPair(
        A=np.diag(d), B=matrix_unit(n, 0, 0), q=q, expected_ratio=(1.0 - q) ** 2 * (n - 1) / n,
        label='one-sided',
    )


def projector_pair(n: int, q: float) -> WitnessPair:
    """A = B = E_11, a rank-one orthogonal projector; ratio (1-q)^2."""
    P = matrix_unit(n, 0, 0)
    return WitnessPair(A=P, B=P.copy(), q=q, expected_ratio=(1.0 - q) ** 2, label='projector')


def ftmax_pair(n: int, q: float, t: float | None = None) -> WitnessPair:
    """f-family pair at t (default t_max(q)) embedded into n x n."""
    if t is None:
        t = t_max(q)
    A, B = f_family_pair(q, t)
    return WitnessPair(
        A=embed(A, n), B=embed(B, n), q=q, expected_ratio=f_eval(q, t), label='ftmax',
    )


def diag_counterexample(n: int, q: float) -> WitnessPair:
    """A = B = diag(n-1, -1, ..., -1), traceless; ratio g(n)(1-q)^2."""
    d = -np.ones(n, dtype=np.complex128)
    d[0] = n - 1
    A = np.diag(d)
    return WitnessPair(A=A, B=A.copy(), q=q, expected_ratio=g(n) * (1.0 - q) ** 2, label='diag')


def sharpness_witnesses(q: float, n: int) -> List[WitnessPair]:
    """Pairs attaining the proved bounds, plus the traceless counterexample inside the crossover."""
    if q > 0:
        return [kyfan_pair(n, q), traceless_a_pair(n, q)]
    witnesses = [projector_pair(n, q)]
    if n >= 4:
        q_min, q_max = q_crossover(n)
        if q_min <= q <= q_max:
            witnesses.append(diag_counterexample(n, q))
    return witnesses


def class_witness(n: int, q: float, matrix_class: MatrixClass) -> WitnessPair:
    """Best known starting pair for maximizing the ratio over a class."""
    if matrix_class.traceless_a:
        if matrix_class is MatrixClass.TRACELESS_BOTH:
            candidates = [traceless_both_pair(n, q)]
        else:
            candidates = [traceless_a_pair(n, q), one_sided_traceless_pair(n, q)]
        if q <= 0:
            candidates.append(diag_counterexample(n, q))
        return max(candidates, key=lambda w: w.expected_ratio)
    if n == 1 or q <= 0:
        return projector_pair(n, q)
    if matrix_class is MatrixClass.GENERAL and q != 1:
        witness = ftmax_pair(n, q)
        logger.debug(f'f-family witness for n={n}, q={q}: ratio {witness.expected_ratio} > {1 + q * q}')
        return witness
    return kyfan_pair(n, q)


def witness_by_family(family: str, n: int, q: float, t: float | None = None) -> WitnessPair:
    """Lookup used by the witness command."""
    builders = {
        'kyfan': lambda: kyfan_pair(n, q),
        'projector': lambda: projector_pair(n, q),
        'ftmax': lambda: ftmax_pair(n, q, t),
        'diag': lambda: diag_counterexample(n, q),
        'traceless': lambda: traceless_a_pair(n, q),
        'traceless-both': lambda: traceless_both_pair(n, q),
        'one-sided': lambda: one_sided_traceless_pair(n, q),
    }
    if family not in builders:
        raise ValueError(f'Unknown witness family: {family}')
    return builders[family]()
