import numpy as np
import pytest

from qcomm_bounds.bounds import class_witness, conjectured_bound, ratio
from qcomm_bounds.exceptions import DegenerateOperatorError, OptimizerError
from qcomm_bounds.matcore import frobenius_norm_sq, identity, q_commutator, random_matrix, random_traceless, \
    vectorize
from qcomm_bounds.models import MatrixClass, OptConfig
from qcomm_bounds.optimizer import alternating_ascent, best_A_given_B, best_B_given_A, build_MA, build_NB, \
    diagonal_indices, maximize_ratio, q_grid, seed_with_witness, sweep_n, sweep_q, trace_projector


@pytest.mark.parametrize('q', [-2.0, 0.0, 0.5, 1.0])
def test_vectorized_commutator_in_either_slot(rng, q):
    A, B = random_matrix(3, rng), random_matrix(3, rng)
    expected = vectorize(q_commutator(A, B, q))
    np.testing.assert_allclose(build_MA(A, q) @ vectorize(B), expected, atol=1e-12)
    np.testing.assert_allclose(build_NB(B, q) @ vectorize(A), expected, atol=1e-12)


def test_trace_projector(rng):
    A = random_matrix(4, rng)
    P = trace_projector(4)
    projected = P @ vectorize(A)
    np.testing.assert_allclose(projected, vectorize(A - np.trace(A) / 4 * identity(4)), atol=1e-12)
    np.testing.assert_allclose(P @ P, P, atol=1e-12)


def test_diagonal_indices():
    np.testing.assert_array_equal(diagonal_indices(3), [0, 4, 8])
    v = vectorize(np.diag([1, 2, 3]))
    np.testing.assert_array_equal(v[diagonal_indices(3)], [1, 2, 3])


def test_best_B_given_A_is_optimal(rng):
    A = random_matrix(3, rng)
    B, value = best_B_given_A(A, 0.5)
    assert frobenius_norm_sq(B) == pytest.approx(1.0)
    assert ratio(A, B, 0.5) == pytest.approx(value, rel=1e-10)
    for _ in range(20):
        assert ratio(A, random_matrix(3, rng), 0.5) <= value + 1e-10


@pytest.mark.parametrize('matrix_class', list(MatrixClass))
def test_best_A_given_B_stays_in_class(rng, matrix_class):
    B = random_matrix(3, rng)
    A, value = best_A_given_B(B, -0.5, matrix_class)
    assert ratio(A, B, -0.5) == pytest.approx(value, rel=1e-10)
    if matrix_class.traceless_a:
        assert abs(np.trace(A)) < 1e-10
    if matrix_class is MatrixClass.NORMAL_A:
        np.testing.assert_allclose(A, np.diag(np.diag(A)), atol=1e-14)


def test_best_A_given_B_degenerate_at_identity():
    # [A, I]_1 = 0 for every A
    with pytest.raises(DegenerateOperatorError):
        best_A_given_B(identity(3), 1.0)


@pytest.mark.parametrize('matrix_class, q', [
    (MatrixClass.GENERAL, -1.5),
    (MatrixClass.GENERAL, 2.0),
    (MatrixClass.TRACELESS_A, -1.0),
    (MatrixClass.TRACELESS_BOTH, -1.0),
    (MatrixClass.TRACELESS_BOTH, 2.0),
    (MatrixClass.NORMAL_A, 0.7),
])
def test_ascent_is_monotone(rng, matrix_class, q):
    A0 = random_traceless(3, rng) if matrix_class.traceless_a else random_matrix(3, rng)
    if matrix_class is MatrixClass.NORMAL_A:
        A0 = np.diag(np.diag(A0))
    trace = alternating_ascent(A0, q, matrix_class)
    assert np.all(np.diff(trace.ratios) >= -1e-10)
    assert trace.final_ratio == pytest.approx(trace.ratios[-1], rel=1e-10)


def test_ascent_stationarity(rng):
    trace = alternating_ascent(random_matrix(3, rng), 1.5)
    M = build_MA(trace.A, 1.5)
    G = M.conj().T @ M
    vec = vectorize(trace.B)
    residual = G @ vec - (vec.conj() @ G @ vec) * vec
    assert np.linalg.norm(residual) <= 1e-8 * np.linalg.norm(G)
    _, a_value = best_A_given_B(trace.B, 1.5)
    assert a_value == pytest.approx(trace.final_ratio, abs=1e-6)


def test_ascent_respects_max_alternations(rng):
    trace = alternating_ascent(random_matrix(4, rng), 2.0, max_alternations=1)
    assert trace.alternations == 1


def test_maximize_ratio_is_reproducible(small_config):
    cfg = small_config(n=3, q=0.8, restarts=6, seed=42)
    first, second = maximize_ratio(cfg, threads=1), maximize_ratio(cfg, threads=1)
    assert first.best_ratio == second.best_ratio
    np.testing.assert_array_equal(first.A, second.A)
    assert first.restart_index == second.restart_index


def test_maximize_ratio_independent_of_threads(small_config):
    cfg = small_config(n=3, q=-0.6, restarts=6, seed=7)
    serial, parallel = maximize_ratio(cfg, threads=1), maximize_ratio(cfg, threads=4)
    assert serial.best_ratio == pytest.approx(parallel.best_ratio, rel=1e-12)
    assert serial.restart_index == parallel.restart_index
    np.testing.assert_allclose(serial.A, parallel.A, atol=1e-12)


def test_maximize_ratio_preserves_class(small_config):
    traceless = maximize_ratio(small_config(n=3, q=-1.0, matrix_class=MatrixClass.TRACELESS_A), threads=1)
    assert abs(np.trace(traceless.A)) < 1e-10
    normal = maximize_ratio(small_config(n=3, q=1.0, matrix_class=MatrixClass.NORMAL_A), threads=1)
    np.testing.assert_allclose(normal.A, np.diag(np.diag(normal.A)), atol=1e-14)
    assert normal.best_ratio <= 2.0 + 1e-9


def test_maximize_ratio_result_is_consistent(small_config):
    result = maximize_ratio(small_config(n=2, q=0.3), threads=1)
    assert frobenius_norm_sq(result.A) == pytest.approx(1.0)
    assert frobenius_norm_sq(result.B) == pytest.approx(1.0)
    assert ratio(result.A, result.B, 0.3) == pytest.approx(result.best_ratio, rel=1e-12)
    assert 0 <= result.restart_index < 4
    assert 0 <= result.converged_restarts <= 4
    assert result.witness_ratio is None


@pytest.mark.parametrize('q, expected', [(-1.0, 4.0), (1.0, 2.0), (0.0, 1.0)])
def test_unseeded_optimizer_finds_n2_maximum(q, expected):
    cfg = OptConfig(n=2, q=q, restarts=16, seed=0)
    assert maximize_ratio(cfg, threads=1).best_ratio == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize('matrix_class, q', [
    (MatrixClass.GENERAL, 2.0),
    (MatrixClass.GENERAL, -0.5),
    (MatrixClass.TRACELESS_A, -1.0),
    (MatrixClass.TRACELESS_BOTH, -1.0),
    (MatrixClass.TRACELESS_BOTH, 2.0),
    (MatrixClass.NORMAL_A, 1.5),
])
def test_seed_with_witness_reaches_witness(small_config, matrix_class, q):
    cfg = small_config(n=4, q=q, matrix_class=matrix_class, restarts=2)
    result = seed_with_witness(cfg, threads=1)
    witness = class_witness(4, q, matrix_class)
    assert result.witness_ratio == witness.expected_ratio
    assert result.best_ratio >= witness.expected_ratio - 1e-9


def test_degenerate_restart_becomes_optimizer_error():
    # n = 1, q = 1: the q-commutator vanishes identically
    with pytest.raises(OptimizerError) as excinfo:
        maximize_ratio(OptConfig(n=1, q=1.0, restarts=2), threads=1)
    assert excinfo.value.q == 1.0
    assert excinfo.value.n == 1


def test_q_grid():
    qs = q_grid()
    assert len(qs) == 61
    assert qs[0] == -3.0 and qs[-1] == 3.0
    assert 0.0 in qs and 1.0 in qs and -1.0 in qs
    assert not np.signbit(qs[30])
    np.testing.assert_array_equal(q_grid(0.5, 0.5, 1), [0.5])
    with pytest.raises(ValueError):
        q_grid(0, 1, 0)


def test_sweep_q_rows(small_config):
    template = small_config(n=2, restarts=2)
    rows = sweep_q(2, [1.0, -1.0, 0.0], MatrixClass.GENERAL, template, threads=2)
    assert [row.q for row in rows] == [-1.0, 0.0, 1.0]
    for row in rows:
        bound = conjectured_bound(2, row.q, MatrixClass.GENERAL)
        assert row.conjectured_bound == bound.coefficient
        assert row.regime is bound.regime
        assert row.gap == pytest.approx(row.max_ratio - row.conjectured_bound)
    assert rows[0].max_ratio == pytest.approx(4.0, abs=1e-9)
    assert rows[1].max_ratio == pytest.approx(1.0, abs=1e-9)


def test_sweep_q_deterministic(small_config):
    template = small_config(n=3, restarts=2, seed=5)
    qs = [-0.5, 0.5, 1.5]
    first = sweep_q(3, qs, MatrixClass.TRACELESS_A, template, threads=1)
    second = sweep_q(3, qs, MatrixClass.TRACELESS_A, template, threads=3)
    assert [r.max_ratio for r in first] == pytest.approx([r.max_ratio for r in second], rel=1e-12)


def test_sweep_n(small_config):
    rows = sweep_n([3, 2], -1.0, MatrixClass.GENERAL, small_config(restarts=2))
    assert [row.n for row in rows] == [2, 3]
    assert all(row.max_ratio == pytest.approx(4.0, abs=1e-9) for row in rows)


def test_vectorization_identity_random_triples(rng):
    for _ in range(200):
        n = int(rng.integers(2, 7))
        q = float(rng.uniform(-3, 3))
        A, B = random_matrix(n, rng), random_matrix(n, rng)
        expected = vectorize(q_commutator(A, B, q))
        scale = np.sqrt(frobenius_norm_sq(B)) * max(1.0, np.sqrt(frobenius_norm_sq(A)))
        assert np.linalg.norm(build_MA(A, q) @ vectorize(B) - expected) <= 1e-12 * scale * (1 + abs(q)) * n
        assert np.linalg.norm(build_NB(B, q) @ vectorize(A) - expected) <= 1e-12 * scale * (1 + abs(q)) * n


def test_best_B_given_A_traceless_both(rng):
    A = random_traceless(3, rng)
    B, value = best_B_given_A(A, -1.0, MatrixClass.TRACELESS_BOTH)
    assert abs(np.trace(B)) < 1e-10
    assert ratio(A, B, -1.0) == pytest.approx(value, rel=1e-10)
    _, free_value = best_B_given_A(A, -1.0)
    assert value <= free_value + 1e-10
    for _ in range(20):
        assert ratio(A, random_traceless(3, rng), -1.0) <= value + 1e-10


@pytest.mark.parametrize('q', [-1.0, 0.5, 2.0])
def test_best_B_given_A_survives_perturbation(rng, q):
    A = random_matrix(3, rng)
    B, value = best_B_given_A(A, q)
    for _ in range(100):
        assert ratio(A, B + 1e-4 * random_matrix(3, rng), q) <= value + 1e-8


def test_traceless_both_keeps_B_traceless(small_config):
    result = maximize_ratio(small_config(n=3, q=-1.0, matrix_class=MatrixClass.TRACELESS_BOTH), threads=1)
    assert abs(np.trace(result.A)) < 1e-10
    assert abs(np.trace(result.B)) < 1e-10


def test_traceless_both_at_n4_matches_crossover_curve(small_config):
    cfg = small_config(n=4, q=-1.0, matrix_class=MatrixClass.TRACELESS_BOTH, restarts=4)
    result = seed_with_witness(cfg, threads=1)
    assert result.best_ratio == pytest.approx(7 / 3, abs=1e-6)


def test_one_sided_traceless_beats_crossover_curve(small_config):
    cfg = small_config(n=4, q=-1.0, matrix_class=MatrixClass.TRACELESS_A, restarts=2)
    result = seed_with_witness(cfg, threads=1)
    assert abs(np.trace(result.A)) < 1e-10
    assert result.best_ratio >= 3.0 - 1e-9
    assert result.best_ratio > conjectured_bound(4, -1.0, MatrixClass.TRACELESS_A).coefficient
