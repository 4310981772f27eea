"""Alternating exact spectral ascent of ||[A,B]_q||^2 / (||A||^2 ||B||^2).

With one matrix fixed, the ratio is a Rayleigh quotient of M_A^dagger M_A (in B) or
N_B^dagger N_B (in A), so each half-step is a top-eigenvector computation and the
ratio sequence of a restart never decreases.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from numpy.typing import ArrayLike

from qcomm_bounds.bounds import class_witness, ratio
from qcomm_bounds.config import thread_count
from qcomm_bounds.exceptions import DegenerateOperatorError, OptimizerError, QCommError, ZeroMatrixError
from qcomm_bounds.matcore import as_cmatrix, devectorize, frobenius_norm_sq, hermitian_eigen, make_rng, \
    random_matrix, random_normal_diag, random_traceless
from qcomm_bounds.models import MatrixClass, OptConfig, OptResult
from qcomm_bounds.optimizer.operators import build_MA, build_NB, diagonal_indices, trace_projector

logger = logging.getLogger(__name__)

DEGENERATE_TOL = 1e-14


@dataclass
class AscentTrace:
    """One restart: final pair, ratio after every half-step, convergence flag."""
    A: np.ndarray
    B: np.ndarray
    final_ratio: float
    ratios: List[float] = field(default_factory=list)
    alternations: int = 0
    converged: bool = False


def _normalized(X: np.ndarray) -> np.ndarray:
    norm = np.sqrt(frobenius_norm_sq(X))
    if norm <= 1e-300:
        raise ZeroMatrixError('Cannot normalize a zero matrix')
    return X / norm


def _top_eigenpair(G: np.ndarray, scale: float) -> Tuple[float, np.ndarray]:
    values, vectors = hermitian_eigen(G)
    top = float(values[0])
    if top <= 0.0 or top <= DEGENERATE_TOL * scale:
        raise DegenerateOperatorError(f'Half-step operator vanishes (top eigenvalue {top:.3e})')
    return top, vectors[:, 0]


def best_B_given_A(A: ArrayLike, q: float,
                   matrix_class: MatrixClass = MatrixClass.GENERAL) -> Tuple[np.ndarray, float]:
    """Unit-norm B maximizing the ratio for fixed A, and the attained ratio.

    B is unconstrained except under ``TRACELESS_BOTH``, which takes the top eigenvector
    of P G P. Degenerate top eigenspaces resolve to the eigensolver's first vector.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    norm_a = frobenius_norm_sq(A)
    if norm_a <= 1e-300:
        raise ZeroMatrixError('best_B_given_A requires A != 0')
    M = build_MA(A, q)
    G = M.conj().T @ M
    scale = np.sqrt(frobenius_norm_sq(G))
    if matrix_class is MatrixClass.TRACELESS_BOTH:
        P = trace_projector(n)
        top, vec = _top_eigenpair(P @ G @ P, scale)
        vec = P @ vec
    else:
        top, vec = _top_eigenpair(G, scale)
    return _normalized(devectorize(vec)), top / norm_a


def best_A_given_B(B: ArrayLike, q: float,
                   matrix_class: MatrixClass = MatrixClass.GENERAL) -> Tuple[np.ndarray, float]:
    """Unit-norm A in the class maximizing the ratio for fixed B, and the attained ratio.

    Traceless A uses the top eigenvector of P G P with P the projector onto traceless
    matrices; normal A restricts G to the diagonal entries of vec(A).

    Raises:
        DegenerateOperatorError: If the (projected) operator is zero, e.g. B ~ I at q = 1.
    """
    B = as_cmatrix(B)
    n = B.shape[0]
    norm_b = frobenius_norm_sq(B)
    if norm_b <= 1e-300:
        raise ZeroMatrixError('best_A_given_B requires B != 0')
    N = build_NB(B, q)
    G = N.conj().T @ N
    scale = np.sqrt(frobenius_norm_sq(G))

    if matrix_class.traceless_a:
        P = trace_projector(n)
        top, vec = _top_eigenpair(P @ G @ P, scale)
        vec = P @ vec
    elif matrix_class is MatrixClass.NORMAL_A:
        idx = diagonal_indices(n)
        top, diag_vec = _top_eigenpair(G[np.ix_(idx, idx)], scale)
        vec = np.zeros(n * n, dtype=np.complex128)
        vec[idx] = diag_vec
    else:
        top, vec = _top_eigenpair(G, scale)
    return _normalized(devectorize(vec)), top / norm_b


def sample_start(n: int, matrix_class: MatrixClass, rng: np.random.Generator) -> np.ndarray:
    """Random starting A from the class."""
    if matrix_class.traceless_a:
        return random_traceless(n, rng)
    if matrix_class is MatrixClass.NORMAL_A:
        return random_normal_diag(n, rng)
    return random_matrix(n, rng)


def alternating_ascent(A0: ArrayLike, q: float, matrix_class: MatrixClass = MatrixClass.GENERAL,
                       max_alternations: int = 500, ratio_tol: float = 1e-11) -> AscentTrace:
    """Run one restart from A0 until the ratio gain drops below ratio_tol."""
    A = _normalized(as_cmatrix(A0))
    B, value = best_B_given_A(A, q, matrix_class)
    trace = AscentTrace(A=A, B=B, final_ratio=value, ratios=[value])

    previous = value
    for alternation in range(1, max_alternations + 1):
        A, a_value = best_A_given_B(B, q, matrix_class)
        B, b_value = best_B_given_A(A, q, matrix_class)
        trace.ratios.extend([a_value, b_value])
        trace.alternations = alternation
        if b_value - previous < ratio_tol:
            trace.converged = True
            break
        previous = b_value

    trace.A, trace.B = A, B
    trace.final_ratio = ratio(A, B, q)
    return trace


def _run_restarts(cfg: OptConfig, starts: Dict[int, np.ndarray], threads: int | None) -> OptResult:
    def run(restart_index: int) -> Tuple[int, AscentTrace]:
        rng = make_rng(cfg.seed, restart_index)
        A0 = starts.get(restart_index)
        if A0 is None:
            A0 = sample_start(cfg.n, cfg.matrix_class, rng)
        try:
            trace = alternating_ascent(A0, cfg.q, cfg.matrix_class, cfg.max_alternations, cfg.ratio_tol)
        except QCommError as e:
            raise OptimizerError(str(e), q=cfg.q, n=cfg.n, restart_index=restart_index) from e
        logger.debug(
            f'restart {restart_index}: ratio={trace.final_ratio:.15g} '
            f'alternations={trace.alternations} converged={trace.converged}'
        )
        return restart_index, trace

    workers = min(threads or thread_count(), cfg.restarts)
    if workers == 1:
        results = [run(r) for r in range(cfg.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(cfg.restarts)))

    best_index, best = max(results, key=lambda item: (item[1].final_ratio, -item[0]))
    converged_restarts = sum(1 for _, trace in results if trace.converged)
    if converged_restarts < cfg.restarts:
        logger.warning(
            f'{cfg.restarts - converged_restarts}/{cfg.restarts} restarts hit max_alternations '
            f'(n={cfg.n}, q={cfg.q}, class={cfg.matrix_class.value})'
        )
    return OptResult(
        best_ratio=best.final_ratio,
        A=best.A,
        B=best.B,
        alternations_used=best.alternations,
        restart_index=best_index,
        converged=best.converged,
        converged_restarts=converged_restarts,
    )


def maximize_ratio(cfg: OptConfig, threads: int | None = None) -> OptResult:
    """Best ratio over cfg.restarts independent alternating ascents from random starts.

    Restart r draws from the sub-stream (cfg.seed, r), so the result does not depend
    on the number of worker threads.
    """
    logger.info(
        f'Maximizing ratio: n={cfg.n} q={cfg.q} class={cfg.matrix_class.value} restarts={cfg.restarts}'
    )
    result = _run_restarts(cfg, {}, threads)
    logger.info(f'Best ratio {result.best_ratio:.15g} from restart {result.restart_index}')
    return result


def seed_with_witness(cfg: OptConfig, threads: int | None = None) -> OptResult:
    """Like :func:`maximize_ratio`, with restart 0 started from the class witness."""
    witness = class_witness(cfg.n, cfg.q, cfg.matrix_class)
    logger.info(
        f'Maximizing ratio from {witness.label} witness ({witness.expected_ratio:.15g}): '
        f'n={cfg.n} q={cfg.q} class={cfg.matrix_class.value} restarts={cfg.restarts}'
    )
    result = _run_restarts(cfg, {0: witness.A}, threads)
    result.witness_ratio = witness.expected_ratio
    return result
