"""Optimizer evidence compared against the conjectured (and proved) bound curves."""
import logging
from typing import Iterable, List

from qcomm_bounds.bounds import class_witness, conjectured_bound, f_at_tmax
from qcomm_bounds.models import BoundRegime, CheckReport, MatrixClass, OptConfig, SweepRow
from qcomm_bounds.optimizer import sweep_q

logger = logging.getLogger(__name__)

CONJECTURE_TOL = 1e-6
WITNESS_TOL = 1e-4


def _open_regime_report(row: SweepRow) -> CheckReport:
    # no closed form for general q > 0: require the optimizer to reach the known
    # f-family value, and the commutator bound 2 exactly at q = 1
    if row.q == 1:
        worst = abs(row.max_ratio - 2.0)
        details = f'n={row.n} q=1 commutator bound 2 max_ratio={row.max_ratio:.12g}'
    else:
        lower = f_at_tmax(row.q)
        worst = lower - row.max_ratio
        details = f'n={row.n} q={row.q:.6g} f(t_max)={lower:.12g} max_ratio={row.max_ratio:.12g}'
    return CheckReport(name='general_positive_q_evidence', trials=1, worst_violation=worst,
                       tolerance=CONJECTURE_TOL, details=details)


def evaluate_row(row: SweepRow) -> CheckReport:
    """Compare one sweep row with its bound; a violation is logged at ERROR level."""
    bound = conjectured_bound(row.n, row.q, row.matrix_class)
    if bound.regime is BoundRegime.GENERAL_POSITIVE_Q_REFERENCE:
        return _open_regime_report(row)

    witness = class_witness(row.n, row.q, row.matrix_class)
    worst = row.max_ratio - bound.coefficient
    details = (
        f'n={row.n} q={row.q:.6g} class={row.matrix_class.value} bound={bound.coefficient:.12g} '
        f'max_ratio={row.max_ratio:.12g} witness={witness.label}:{witness.expected_ratio:.12g}'
    )
    if witness.expected_ratio < bound.coefficient - WITNESS_TOL:
        worst = max(worst, bound.coefficient - witness.expected_ratio)
        details += ' witness-short-of-bound'
    elif witness.expected_ratio > bound.coefficient + CONJECTURE_TOL:
        worst = max(worst, witness.expected_ratio - bound.coefficient)
        details += ' witness-exceeds-bound'
    report = CheckReport(name=f'conjecture[{bound.regime.value}]', trials=1, worst_violation=worst,
                         tolerance=CONJECTURE_TOL, details=details)
    if not report.passed:
        logger.error(f'Bound {bound.regime.value} violated by {worst:.3e}: {details}')
    return report


def check_conjectures(n: int, q_values: Iterable[float], matrix_class: MatrixClass,
                      cfg: OptConfig, threads: int | None = None) -> List[CheckReport]:
    """Sweep q for one (n, class) and report each point against its bound."""
    rows = sweep_q(n, q_values, matrix_class, cfg, seed_witness=True, threads=threads)
    return [evaluate_row(row) for row in rows]
