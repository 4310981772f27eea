import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qcomm_bounds.exceptions import ConvergenceError, DimensionMismatchError, NonHermitianError
from qcomm_bounds.matcore import PAULI, as_cmatrix, devectorize, embed, frobenius_norm_sq, hermitian_eigen, \
    jacobi_eigen, kron, kyfan22_norm_sq, make_rng, matrix_unit, operator_norm, q_commutator, random_matrix, \
    random_normal_diag, random_traceless, random_unitary, singular_values, vectorize


def _hermitian(rng, n):
    X = random_matrix(n, rng)
    return X + X.conj().T


def test_q_commutator_example():
    A = [[1, 2], [3, 4]]
    B = [[0, 1], [1, 0]]
    # AB = [[2, 1], [4, 3]], BA = [[3, 4], [1, 2]]
    expected = np.array([[2 - 0.5 * 3, 1 - 0.5 * 4], [4 - 0.5 * 1, 3 - 0.5 * 2]])
    np.testing.assert_allclose(q_commutator(A, B, 0.5), expected)


def test_q_commutator_special_values(rng):
    A, B = random_matrix(3, rng), random_matrix(3, rng)
    np.testing.assert_allclose(q_commutator(A, B, 0.0), A @ B)
    np.testing.assert_allclose(q_commutator(A, B, 1.0), A @ B - B @ A)
    np.testing.assert_allclose(q_commutator(A, B, -1.0), A @ B + B @ A)


def test_q_commutator_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        q_commutator(np.eye(2), np.eye(3), 0.5)


@pytest.mark.parametrize('bad', [np.zeros((2, 3)), np.zeros((0, 0)), np.array([[np.nan]]), np.zeros(4)])
def test_as_cmatrix_rejects(bad):
    with pytest.raises(ValueError):
        as_cmatrix(bad)


def test_frobenius_norm_sq():
    assert frobenius_norm_sq([[1, 2j], [0, -3]]) == 14.0
    assert frobenius_norm_sq(np.zeros((3, 3))) == 0.0


def test_vectorize_stacks_columns():
    B = np.array([[1, 2], [3, 4]])
    np.testing.assert_array_equal(vectorize(B), [1, 3, 2, 4])
    np.testing.assert_array_equal(devectorize([1, 3, 2, 4]), B)


def test_devectorize_rejects_non_square_length():
    with pytest.raises(DimensionMismatchError):
        devectorize(np.ones(5))


def test_kron_blocks():
    X = np.array([[1, 2], [3, 4]])
    Y = np.eye(2)
    K = kron(X, Y)
    assert K.shape == (4, 4)
    np.testing.assert_array_equal(K[2:, :2], 3 * np.eye(2))


def test_vectorized_product_identity(rng):
    A, B, C = random_matrix(3, rng), random_matrix(3, rng), random_matrix(3, rng)
    np.testing.assert_allclose(vectorize(A @ B @ C), kron(C.T, A) @ vectorize(B), atol=1e-12)


def test_matrix_unit_and_embed():
    E = matrix_unit(3, 0, 2)
    assert E[0, 2] == 1 and frobenius_norm_sq(E) == 1
    X = embed([[1, 2], [3, 4]], 4)
    assert X.shape == (4, 4)
    assert X[1, 1] == 4 and frobenius_norm_sq(X[2:, :]) == 0
    with pytest.raises(DimensionMismatchError):
        embed(np.eye(3), 2)


def test_pauli_algebra():
    for k in range(3):
        np.testing.assert_allclose(PAULI[k] @ PAULI[k], np.eye(2))
        assert np.trace(PAULI[k]) == 0
    np.testing.assert_allclose(PAULI[0] @ PAULI[1], 1j * PAULI[2])


@pytest.mark.parametrize('n', [1, 2, 5, 8])
def test_jacobi_agrees_with_lapack(rng, n):
    H = _hermitian(rng, n)
    values_j, vectors_j = hermitian_eigen(H, backend='jacobi')
    values_l, _ = hermitian_eigen(H, backend='lapack')
    np.testing.assert_allclose(values_j, values_l, atol=1e-10 * np.linalg.norm(H))
    np.testing.assert_allclose(vectors_j.conj().T @ vectors_j, np.eye(n), atol=1e-10)
    np.testing.assert_allclose(vectors_j @ np.diag(values_j) @ vectors_j.conj().T, H, atol=1e-9)


def test_hermitian_eigen_descending(rng):
    values, vectors = hermitian_eigen(_hermitian(rng, 6))
    assert np.all(np.diff(values) <= 0)
    assert vectors.shape == (6, 6)


def test_hermitian_eigen_rejects_non_hermitian():
    with pytest.raises(NonHermitianError):
        hermitian_eigen([[1, 2], [0, 1]])


def test_jacobi_reports_non_convergence(rng):
    with pytest.raises(ConvergenceError) as excinfo:
        jacobi_eigen(_hermitian(rng, 6), max_sweeps=0)
    assert excinfo.value.iterations == 0


def test_singular_values_and_norms():
    A = np.diag([3.0, -2.0, 1.0])
    np.testing.assert_allclose(singular_values(A), [3, 2, 1], atol=1e-12)
    assert operator_norm(A) == pytest.approx(3.0)
    assert kyfan22_norm_sq(A) == pytest.approx(13.0)
    assert kyfan22_norm_sq([[2.0]]) == pytest.approx(4.0)


def test_singular_values_unitarily_invariant(rng):
    A, U, V = random_matrix(4, rng), random_unitary(4, rng), random_unitary(4, rng)
    np.testing.assert_allclose(singular_values(U @ A @ V), singular_values(A), atol=1e-10)
    np.testing.assert_allclose(U.conj().T @ U, np.eye(4), atol=1e-12)


def test_samplers_respect_class(rng):
    assert abs(np.trace(random_traceless(4, rng))) < 1e-12
    D = random_normal_diag(4, rng)
    np.testing.assert_array_equal(D, np.diag(np.diag(D)))


def test_make_rng_streams_are_reproducible():
    a = make_rng(7, 3).standard_normal(4)
    b = make_rng(7, 3).standard_normal(4)
    c = make_rng(7, 4).standard_normal(4)
    np.testing.assert_array_equal(a, b)
    assert not np.allclose(a, c)


@settings(deadline=None, max_examples=50)
@given(
    seed=st.integers(min_value=0, max_value=2 ** 32 - 1),
    n=st.integers(min_value=1, max_value=5),
    q=st.floats(min_value=-5.0, max_value=5.0, allow_nan=False),
)
def test_q_commutator_submultiplicative(seed, n, q):
    rng = make_rng(seed)
    A, B = random_matrix(n, rng), random_matrix(n, rng)
    lhs = frobenius_norm_sq(q_commutator(A, B, q))
    rhs = (1 + abs(q)) ** 2 * frobenius_norm_sq(A) * frobenius_norm_sq(B)
    assert lhs <= rhs * (1 + 1e-12)


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(min_value=0, max_value=2 ** 32 - 1), n=st.integers(min_value=1, max_value=6))
def test_q_commutator_unitary_covariance(seed, n):
    rng = make_rng(seed)
    A, B, U = random_matrix(n, rng), random_matrix(n, rng), random_unitary(n, rng)
    C = q_commutator(U @ A @ U.conj().T, U @ B @ U.conj().T, 0.7)
    assert frobenius_norm_sq(C) == pytest.approx(frobenius_norm_sq(q_commutator(A, B, 0.7)), rel=1e-10)


ENTRIES = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@settings(deadline=None, max_examples=50)
@given(
    A=arrays(np.float64, (3, 3), elements=ENTRIES),
    B=arrays(np.float64, (3, 3), elements=ENTRIES),
    C=arrays(np.float64, (3, 3), elements=ENTRIES),
    q=st.floats(min_value=-3.0, max_value=3.0),
)
def test_q_commutator_bilinear(A, B, C, q):
    np.testing.assert_allclose(q_commutator(A, B + C, q), q_commutator(A, B, q) + q_commutator(A, C, q), atol=1e-9)
    np.testing.assert_allclose(q_commutator(2 * A, B, q), 2 * q_commutator(A, B, q), atol=1e-9)


@settings(deadline=None, max_examples=50)
@given(A=arrays(np.float64, (4, 4), elements=ENTRIES))
def test_norm_ordering(A):
    fro = frobenius_norm_sq(A)
    assert operator_norm(A) ** 2 <= kyfan22_norm_sq(A) * (1 + 1e-12) + 1e-12
    assert kyfan22_norm_sq(A) <= fro * (1 + 1e-10) + 1e-10


def test_q_commutator_reference_values():
    P = np.diag([1.0, 0.0])
    np.testing.assert_allclose(q_commutator(P, P, 0.5), 0.5 * P)
    for q in (-2.0, 0.0, 0.7, 3.0):
        np.testing.assert_allclose(q_commutator(PAULI[0], PAULI[1], q), 1j * (1 + q) * PAULI[2], atol=1e-15)
    A = [[2, 8], [0, -1]]
    B = [[2, 0], [-8, -1]]
    assert frobenius_norm_sq(q_commutator(A, B, 2.0)) == 23953.0


def test_vectorize_preserves_norm(rng):
    for n in (1, 2, 5):
        B = random_matrix(n, rng)
        v = vectorize(B)
        assert np.vdot(v, v).real == pytest.approx(frobenius_norm_sq(B), rel=1e-12)


@pytest.mark.parametrize('backend', ['jacobi', 'lapack'])
def test_eigen_recovers_repeated_spectrum(rng, backend):
    spectrum = np.array([3.0, 3.0, 1.0, -2.0, -2.0])
    U = random_unitary(5, rng)
    H = U @ np.diag(spectrum) @ U.conj().T
    H = (H + H.conj().T) / 2
    values, vectors = hermitian_eigen(H, backend=backend)
    np.testing.assert_allclose(values, spectrum, atol=1e-10)
    np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(5), atol=1e-10)
    np.testing.assert_allclose(H @ vectors, vectors * values, atol=1e-10)
