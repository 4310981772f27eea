# flake8: noqa
from qcomm_bounds.bounds.formulas import bound_general_nonpositive, bound_normal_positive, bound_traceless, \
    conjectured_bound, f_at_tmax, f_derivative, f_eval, f_numerator, g, h_of_q, q_crossover, t_max, x_of_q
from qcomm_bounds.bounds.witnesses import class_witness, diag_counterexample, f_family_commutator, \
    f_family_pair, ftmax_pair, kyfan_pair, normal_commutator_norm_sq, one_sided_traceless_pair, projector_pair, \
    ratio, sharpness_witnesses, traceless_a_pair, traceless_both_pair, witness_by_family
