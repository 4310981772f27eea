"""Assembly of the proof and conjecture suites run by the verify command."""
import logging
from typing import List

import numpy as np

from qcomm_bounds.matcore import complex_gaussian, make_rng
from qcomm_bounds.models import CheckReport, MatrixClass, OptConfig
from qcomm_bounds.optimizer import q_grid
from qcomm_bounds.verify.conjectures import check_conjectures
from qcomm_bounds.verify.proofs import check_counterexample_q2, check_M_blocks, check_prop1, check_prop2, \
    check_prop3_spectral, check_rank_one_traceless, check_su2_identity, check_unitary_invariance, check_X_nonneg

logger = logging.getLogger(__name__)

X_NONNEG_QS = (-2.0, -1.0, -0.3, 0.0, 0.3, 1.0, 2.0)
NORMAL_QS = (0.5, 1.0, 2.0, 5.0)
ANY_QS = (-2.0, -0.5, 0.5, 2.0)
DIMENSIONS = (2, 3, 4, 5, 6)


def run_proof_suite(trials: int = 10000, seed: int = 0) -> List[CheckReport]:
    """Every proved statement; all reports must pass for any seed."""
    reports = [check_X_nonneg(q, trials, seed) for q in X_NONNEG_QS]
    reports += [check_su2_identity(q, trials, seed) for q in X_NONNEG_QS]
    for n in DIMENSIONS:
        reports += [check_prop1(q, n, trials, seed) for q in NORMAL_QS]
        reports += [check_prop2(q, n, trials, seed) for q in NORMAL_QS]
        reports += [check_rank_one_traceless(q, n, trials, seed) for q in ANY_QS]
        reports += [check_unitary_invariance(q, n, max(trials // 100, 1), seed) for q in ANY_QS]
    reports += [check_prop3_spectral(q, max(trials // 100, 1), seed) for q in ANY_QS]

    rng = make_rng(seed, 7)
    for a, b, q in zip(complex_gaussian(rng, 8), complex_gaussian(rng, 8), rng.uniform(-3, 3, 8)):
        reports.append(check_M_blocks(complex(a), complex(b), float(q)))
    reports.append(check_counterexample_q2())

    failed = [r for r in reports if not r.passed]
    for report in failed:
        logger.error(f'Proved statement failed: {report.summary_line()}')
    logger.info(f'Proof suite: {len(reports) - len(failed)}/{len(reports)} checks passed')
    return reports


def run_conjecture_suite(n_max: int = 4, restarts: int = 16, seed: int = 0,
                         q_values: np.ndarray | None = None, threads: int | None = None) -> List[CheckReport]:
    """Optimizer evidence for every class and n in 2..n_max on the figure grid."""
    qs = q_grid() if q_values is None else q_values
    reports = []
    for n in range(2, n_max + 1):
        for matrix_class in MatrixClass:
            cfg = OptConfig(n=n, q=0.0, matrix_class=matrix_class, restarts=restarts, seed=seed)
            reports += check_conjectures(n, qs, matrix_class, cfg, threads=threads)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f'Conjecture suite: {len(reports) - failed}/{len(reports)} points supported')
    return reports
