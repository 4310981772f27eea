# flake8: noqa
from qcomm_bounds.verify.conjectures import check_conjectures, evaluate_row
from qcomm_bounds.verify.proofs import PauliVector, check_counterexample_q2, check_M_blocks, check_prop1, \
    check_prop2, check_prop3_spectral, check_rank_one_traceless, check_su2_identity, check_unitary_invariance, \
    check_X_nonneg, m_blocks, su2_qcommutator, x_direct, x_regrouped
from qcomm_bounds.verify.suites import run_conjecture_suite, run_proof_suite
