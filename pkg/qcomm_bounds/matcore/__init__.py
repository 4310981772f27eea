# flake8: noqa
from qcomm_bounds.matcore.eigen import hermitian_eigen, jacobi_eigen, kyfan22_norm_sq, operator_norm, \
    singular_values
from qcomm_bounds.matcore.linalg import PAULI, as_cmatrix, devectorize, embed, frobenius_norm_sq, identity, \
    kron, matrix_unit, q_commutator, vectorize
from qcomm_bounds.matcore.sampling import complex_gaussian, make_rng, random_matrix, random_normal_diag, \
    random_traceless, random_unitary
