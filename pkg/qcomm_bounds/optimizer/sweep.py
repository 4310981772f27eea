import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List

import numpy as np

from qcomm_bounds.bounds import conjectured_bound
from qcomm_bounds.config import thread_count
from qcomm_bounds.models import MatrixClass, OptConfig, SweepRow
from qcomm_bounds.optimizer.ascent import maximize_ratio, seed_with_witness

logger = logging.getLogger(__name__)


def q_grid(q_from: float = -3.0, q_to: float = 3.0, q_steps: int = 61) -> np.ndarray:
    """Uniform grid with both endpoints included, rounded to 12 decimals so that
    points such as 0 and 1 land exactly on the regime boundaries."""
    if q_steps < 1:
        raise ValueError(f'q_steps must be >= 1, got {q_steps}')
    if q_steps == 1:
        return np.array([float(q_from)])
    return np.round(np.linspace(q_from, q_to, q_steps), 12) + 0.0


def _point(template: OptConfig, n: int, q: float, matrix_class: MatrixClass, seed_witness: bool) -> SweepRow:
    cfg = OptConfig(**{**template.model_dump(), 'n': n, 'q': float(q), 'matrix_class': matrix_class})
    result = seed_with_witness(cfg, threads=1) if seed_witness else maximize_ratio(cfg, threads=1)
    bound = conjectured_bound(n, cfg.q, matrix_class)
    return SweepRow(
        q=cfg.q,
        n=n,
        matrix_class=matrix_class,
        max_ratio=result.best_ratio,
        conjectured_bound=bound.coefficient,
        converged_restarts=result.converged_restarts,
        regime=bound.regime,
    )


def _map(func, items: list, threads: int | None) -> list:
    workers = min(threads or thread_count(), max(len(items), 1))
    if workers == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def sweep_q(n: int, q_values: Iterable[float], matrix_class: MatrixClass, template: OptConfig,
            seed_witness: bool = True, threads: int | None = None) -> List[SweepRow]:
    """One maximization per q, rows ordered by q.

    Args:
        n (int): Matrix dimension.
        q_values (Iterable[float]): Deformation parameters; duplicates are kept.
        matrix_class (MatrixClass): Constraint on A.
        template (OptConfig): Source of restarts, tolerances and seed; its n, q and
            class are overridden per point.
        seed_witness (bool, optional): Start restart 0 at the class witness. Defaults to True.
        threads (int | None, optional): Worker cap across q points. Defaults to QCOMM_THREADS.

    Returns:
        List[SweepRow]: Rows sorted by q.
    """
    qs = sorted(float(q) for q in q_values)
    logger.info(f'Sweeping {len(qs)} q values: n={n} class={matrix_class.value}')
    rows = _map(lambda q: _point(template, n, q, matrix_class, seed_witness), qs, threads)
    worst = max((row.gap for row in rows), default=0.0)
    logger.info(f'Sweep done: n={n} class={matrix_class.value} max gap={worst:.3e}')
    return rows


def sweep_n(n_values: Iterable[int], q: float, matrix_class: MatrixClass, template: OptConfig,
            seed_witness: bool = True, threads: int | None = None) -> List[SweepRow]:
    """One maximization per dimension at fixed q, rows ordered by n.

    Shows how the maximum depends on n, e.g. the g(n)(1-q)^2 branch of the traceless
    curve growing towards (1-q)^2.
    """
    ns = sorted(int(n) for n in n_values)
    logger.info(f'Sweeping {len(ns)} dimensions: q={q} class={matrix_class.value}')
    rows = _map(lambda n: _point(template, n, q, matrix_class, seed_witness), ns, threads)
    worst = max((row.gap for row in rows), default=0.0)
    logger.info(f'Sweep done: q={q} class={matrix_class.value} max gap={worst:.3e}')
    return rows
