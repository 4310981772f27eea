# flake8: noqa
from qcomm_bounds.optimizer.ascent import AscentTrace, alternating_ascent, best_A_given_B, best_B_given_A, \
    maximize_ratio, sample_start, seed_with_witness
from qcomm_bounds.optimizer.operators import build_MA, build_NB, diagonal_indices, trace_projector
from qcomm_bounds.optimizer.sweep import q_grid, sweep_n, sweep_q
