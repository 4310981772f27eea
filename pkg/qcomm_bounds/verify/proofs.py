"""Proved statements turned into fuzz checks.

Checks draw batches of random matrices and evaluate every trial at once with numpy
broadcasting; a check fails only if some trial exceeds its tolerance.
"""
import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from qcomm_bounds.bounds import f_family_commutator, normal_commutator_norm_sq
from qcomm_bounds.exceptions import RegimeError
from qcomm_bounds.matcore import PAULI, complex_gaussian, hermitian_eigen, make_rng, operator_norm, random_unitary
from qcomm_bounds.models import CheckReport
from qcomm_bounds.optimizer import build_MA

logger = logging.getLogger(__name__)

PROOF_TOL = 1e-10
NORM_TOL = 1e-9


def _norm_sq(X: np.ndarray) -> np.ndarray:
    """Squared Frobenius norm over the last two axes."""
    return np.sum(X.real ** 2 + X.imag ** 2, axis=(-2, -1))


def _qcomm(A: np.ndarray, B: np.ndarray, q: float) -> np.ndarray:
    return A @ B - q * (B @ A)


def _kyfan_sq_of_diag(d: np.ndarray) -> np.ndarray:
    mods = np.sort(np.abs(d) ** 2, axis=-1)[..., ::-1]
    return np.sum(mods[..., :2], axis=-1)


def x_direct(A: ArrayLike, B: ArrayLike, q: float) -> np.ndarray:
    """X = (1+q^2)||A||^2||B||^2 - ||[A,B]_q||^2, batched over leading axes."""
    A, B = np.asarray(A, dtype=np.complex128), np.asarray(B, dtype=np.complex128)
    return (1 + q * q) * _norm_sq(A) * _norm_sq(B) - _norm_sq(_qcomm(A, B, q))


def x_regrouped(A: ArrayLike, B: ArrayLike, q: float, sign: int) -> np.ndarray:
    """Sum-of-squares form of X for zero-diagonal 2 x 2 A.

    ``sign=+1`` takes the upper signs, (1-q)^2 and +2q|a12 b12* + a21 b21*|^2, whose
    terms are all non-negative for q >= 0; ``sign=-1`` takes the lower signs, suited
    to q < 0.
    """
    A, B = np.asarray(A, dtype=np.complex128), np.asarray(B, dtype=np.complex128)
    a12, a21 = A[..., 0, 1], A[..., 1, 0]
    b11, b12, b21, b22 = B[..., 0, 0], B[..., 0, 1], B[..., 1, 0], B[..., 1, 1]
    pairs = np.abs(a12) ** 2 * np.abs(b12) ** 2 + np.abs(a21) ** 2 * np.abs(b21) ** 2
    diagonal = np.abs(a12) ** 2 * np.abs(b11 + q * b22) ** 2 + np.abs(a21) ** 2 * np.abs(b22 + q * b11) ** 2
    cross = np.abs(a12 * np.conj(b12) + sign * a21 * np.conj(b21)) ** 2
    return (1 - sign * q) ** 2 * pairs + diagonal + sign * 2 * q * cross


def check_X_nonneg(q: float, trials: int = 10000, seed: int = 0) -> CheckReport:
    """X >= 0 for traceless 2 x 2 A in zero-diagonal form, direct and regrouped."""
    rng = make_rng(seed, 1)
    A = np.zeros((trials, 2, 2), dtype=np.complex128)
    A[:, 0, 1] = complex_gaussian(rng, trials)
    A[:, 1, 0] = complex_gaussian(rng, trials)
    B = complex_gaussian(rng, (trials, 2, 2))

    scale = (1 + q * q) * _norm_sq(A) * _norm_sq(B)
    direct = x_direct(A, B, q)
    upper_err = np.abs(x_regrouped(A, B, q, +1) - direct) / scale
    lower_err = np.abs(x_regrouped(A, B, q, -1) - direct) / scale
    chosen, label = (upper_err, 'upper') if q >= 0 else (lower_err, 'lower')

    negativity = float(np.max(-direct / scale))
    worst = max(negativity, float(np.max(chosen)))
    details = f'q={q} completed-square signs={label}'
    upper_ok, lower_ok = np.max(upper_err) <= PROOF_TOL, np.max(lower_err) <= PROOF_TOL
    if upper_ok != lower_ok:
        logger.warning(f'X regrouping: only the {"upper" if upper_ok else "lower"} sign variant matches at q={q}')
        details += f' only-{"upper" if upper_ok else "lower"}-variant-matches'
    return CheckReport(name='X_nonneg', trials=trials, worst_violation=worst, tolerance=PROOF_TOL, details=details)


def m_blocks(a: complex, b: complex, q: float):
    """The two 2 x 2 blocks of M_A M_A^dagger for A = [[0, a], [b, 0]]."""
    aa, bb = abs(a) ** 2, abs(b) ** 2
    M1 = np.array([
        [aa + q * q * bb, -q * (aa + bb)],
        [-q * (aa + bb), bb + q * q * aa],
    ], dtype=np.complex128)
    M2 = np.array([
        [(1 + q * q) * bb, -2 * q * np.conj(a) * b],
        [-2 * q * a * np.conj(b), (1 + q * q) * aa],
    ], dtype=np.complex128)
    return M1, M2


# vec positions of (C11, C22) and (C21, C12) for n = 2
BLOCK_ORDER = [0, 3, 1, 2]


def check_M_blocks(a: complex, b: complex, q: float) -> CheckReport:
    """M_A M_A^dagger is permutation-similar to M1 (+) M2, with the trace, determinant
    and top-eigenvalue facts that bound ||M_A||_op^2 by (1+q^2)||A||^2."""
    A = np.array([[0, a], [b, 0]], dtype=np.complex128)
    M = build_MA(A, q)
    gram = (M @ M.conj().T)[np.ix_(BLOCK_ORDER, BLOCK_ORDER)]
    M1, M2 = m_blocks(a, b, q)
    expected = np.zeros((4, 4), dtype=np.complex128)
    expected[:2, :2], expected[2:, 2:] = M1, M2

    trace_bound = (1 + q * q) * (abs(a) ** 2 + abs(b) ** 2)
    scale = max(trace_bound, 1e-300)
    violations = [np.sqrt(float(_norm_sq(gram - expected))) / scale]
    for Mi in (M1, M2):
        tr = float(np.trace(Mi).real)
        det = float(np.linalg.det(Mi).real)
        violations.append(abs(tr - trace_bound) / scale)
        violations.append(abs(det - (1 - q * q) ** 2 * abs(a * b) ** 2) / scale ** 2)
        violations.append((4 * det - tr * tr) / scale ** 2)
        violations.append((hermitian_eigen(Mi)[0][0] - trace_bound) / scale)
    return CheckReport(
        name='M_blocks', trials=1, worst_violation=float(max(violations)), tolerance=PROOF_TOL,
        details=f'a={a} b={b} q={q}',
    )


@dataclass(frozen=True)
class PauliVector:
    """Coefficients of sigma_1, sigma_2, sigma_3 in a traceless 2 x 2 matrix."""
    components: np.ndarray

    def __post_init__(self):
        components = np.asarray(self.components, dtype=np.complex128)
        if components.shape != (3,):
            raise ValueError(f'PauliVector needs 3 components, got shape {components.shape}')
        object.__setattr__(self, 'components', components)

    def to_matrix(self) -> np.ndarray:
        return np.einsum('k,kij->ij', self.components, PAULI)


def _su2_formula(a: np.ndarray, b: np.ndarray, q: float) -> np.ndarray:
    dot = np.sum(a * b, axis=-1)
    cross = np.cross(a, b)
    eye = np.eye(2, dtype=np.complex128)
    return (1 - q) * dot[..., None, None] * eye + 1j * (1 + q) * np.einsum('...k,kij->...ij', cross, PAULI)


def su2_qcommutator(a: PauliVector, b: PauliVector, q: float) -> np.ndarray:
    """(1-q)(a.b) I + i(1+q)(a x b).sigma, equal to [a.sigma, b.sigma]_q."""
    return _su2_formula(a.components, b.components, q)


def check_su2_identity(q: float, trials: int = 10000, seed: int = 0) -> CheckReport:
    """su(2) closed form, its norm formula, and the 1+q^2 bound it implies."""
    rng = make_rng(seed, 2)
    a = complex_gaussian(rng, (trials, 3))
    b = complex_gaussian(rng, (trials, 3))
    A = np.einsum('tk,kij->tij', a, PAULI)
    B = np.einsum('tk,kij->tij', b, PAULI)
    direct = _qcomm(A, B, q)
    formula = _su2_formula(a, b, q)

    scale = np.sum(np.abs(a) ** 2, axis=1) * np.sum(np.abs(b) ** 2, axis=1)
    entry_err = np.max(np.abs(direct - formula), axis=(1, 2)) / np.sqrt(scale)
    norm_formula = 2 * ((1 - q) ** 2 * np.abs(np.sum(a * b, axis=1)) ** 2
                        + (1 + q) ** 2 * np.sum(np.abs(np.cross(a, b)) ** 2, axis=1))
    norm_err = np.abs(_norm_sq(direct) - norm_formula) / (4 * (1 + q * q) * scale)
    excess = (_norm_sq(direct) - (1 + q * q) * _norm_sq(A) * _norm_sq(B)) / (4 * (1 + q * q) * scale)
    worst = max(float(np.max(entry_err)), float(np.max(norm_err)), float(np.max(excess)))
    return CheckReport(name='su2_identity', trials=trials, worst_violation=worst, tolerance=PROOF_TOL,
                       details=f'q={q}')


def check_rank_one_traceless(q: float, n: int, trials: int = 10000, seed: int = 0) -> CheckReport:
    """Ratio <= 1+q^2 for A = a|u><v| with <v|u> = 0."""
    if n < 2:
        raise RegimeError(f'Rank-one traceless A requires n >= 2, got n={n}')
    rng = make_rng(seed, 3, n)
    u = complex_gaussian(rng, (trials, n))
    v = complex_gaussian(rng, (trials, n))
    coef = np.sum(np.conj(u) * v, axis=1) / np.sum(np.abs(u) ** 2, axis=1)
    v = v - coef[:, None] * u
    scalar = complex_gaussian(rng, trials)
    A = scalar[:, None, None] * np.einsum('ti,tj->tij', u, np.conj(v))
    B = complex_gaussian(rng, (trials, n, n))

    norms = _norm_sq(A) * _norm_sq(B)
    ratios = _norm_sq(_qcomm(A, B, q)) / norms
    trace_err = np.abs(np.trace(A, axis1=1, axis2=2)) / np.sqrt(_norm_sq(A))
    worst = max(float(np.max(ratios - (1 + q * q))), float(np.max(trace_err)))
    return CheckReport(name='rank_one_traceless', trials=trials, worst_violation=worst, tolerance=PROOF_TOL,
                       details=f'n={n} q={q}')


def check_prop1(q: float, n: int, trials: int = 10000, seed: int = 0) -> CheckReport:
    """Normal A: ||[A,B]_q||^2 <= (1+q^2) kyfan22(A) ||B||^2 <= (1+q^2)||A||^2||B||^2."""
    if q < 0:
        raise RegimeError(f'Normal-matrix bound requires q >= 0, got q={q}')
    rng = make_rng(seed, 4, n)
    d = complex_gaussian(rng, (trials, n))
    B = complex_gaussian(rng, (trials, n, n))
    A = d[:, :, None] * np.eye(n)

    direct = _norm_sq(_qcomm(A, B, q))
    entrywise = normal_commutator_norm_sq(d, B, q)
    tight = (1 + q * q) * _kyfan_sq_of_diag(d) * _norm_sq(B)
    weak = (1 + q * q) * _norm_sq(A) * _norm_sq(B)

    worst = max(
        float(np.max((direct - tight) / tight)),
        float(np.max((tight - weak) / weak)),
        float(np.max(np.abs(direct - entrywise) / tight)),
    )
    return CheckReport(name='prop1_normal_A', trials=trials, worst_violation=worst, tolerance=NORM_TOL,
                       details=f'n={n} q={q}')


def check_unitary_invariance(q: float, n: int, trials: int = 200, seed: int = 0) -> CheckReport:
    """Ratio is unchanged under (A, B) -> (U A U^dagger, U B U^dagger).

    This is what lets the normal class be searched over diagonal A.
    """
    rng = make_rng(seed, 8, n)
    worst = 0.0
    for _ in range(trials):
        A = complex_gaussian(rng, (n, n))
        B = complex_gaussian(rng, (n, n))
        U = random_unitary(n, rng)
        A_rot, B_rot = U @ A @ U.conj().T, U @ B @ U.conj().T
        before = _norm_sq(_qcomm(A, B, q)) / (_norm_sq(A) * _norm_sq(B))
        after = _norm_sq(_qcomm(A_rot, B_rot, q)) / (_norm_sq(A_rot) * _norm_sq(B_rot))
        worst = max(worst, float(abs(after - before) / max(before, 1e-300)))
    return CheckReport(name='unitary_invariance', trials=trials, worst_violation=worst, tolerance=NORM_TOL,
                       details=f'n={n} q={q}')


def check_prop2(q: float, n: int, trials: int = 10000, seed: int = 0) -> CheckReport:
    """Normal B: ||[A,B]_q||^2 <= (1+q^2) ||A||^2 kyfan22(B)."""
    if q < 0:
        raise RegimeError(f'Normal-matrix bound requires q >= 0, got q={q}')
    rng = make_rng(seed, 5, n)
    A = complex_gaussian(rng, (trials, n, n))
    d = complex_gaussian(rng, (trials, n))
    B = d[:, :, None] * np.eye(n)

    direct = _norm_sq(_qcomm(A, B, q))
    tight = (1 + q * q) * _norm_sq(A) * _kyfan_sq_of_diag(d)
    worst = float(np.max((direct - tight) / tight))
    return CheckReport(name='prop2_normal_B', trials=trials, worst_violation=worst, tolerance=NORM_TOL,
                       details=f'n={n} q={q}')


def check_prop3_spectral(q: float, trials: int = 1000, seed: int = 0) -> CheckReport:
    """||M_A||_op^2 <= (1+q^2)||A||^2 for random traceless 2 x 2 A, any real q."""
    rng = make_rng(seed, 6)
    worst = -np.inf
    for _ in range(trials):
        A = complex_gaussian(rng, (2, 2))
        A -= np.trace(A) / 2 * np.eye(2)
        bound = (1 + q * q) * float(_norm_sq(A))
        worst = max(worst, (operator_norm(build_MA(A, q)) ** 2 - bound) / bound)
    return CheckReport(name='prop3_spectral', trials=trials, worst_violation=float(worst), tolerance=PROOF_TOL,
                       details=f'q={q}')


def check_counterexample_q2() -> CheckReport:
    """Integer check that A=[[2,8],[0,-1]], B=[[2,0],[-8,-1]] break 1+q^2 at q=2.

    The pair is the f-family pair at t = 64, so C is also compared with its closed form.
    """
    A = np.array([[2, 8], [0, -1]], dtype=np.int64)
    B = np.array([[2, 0], [-8, -1]], dtype=np.int64)
    C = A @ B - 2 * (B @ A)
    closed_form_err = float(np.max(np.abs(C - f_family_commutator(2.0, 64.0))))
    norm_a, norm_b, norm_c = int(np.sum(A * A)), int(np.sum(B * B)), int(np.sum(C * C))
    bound = 5 * norm_a * norm_b
    worst = float(max(abs(norm_a - 69), abs(norm_b - 69), abs(norm_c - 23953), abs(bound - 23805), closed_form_err))
    if norm_c <= bound:
        worst = max(worst, float(bound - norm_c + 1))
    return CheckReport(
        name='counterexample_q2', trials=1, worst_violation=worst, tolerance=NORM_TOL,
        details=f'||A||^2={norm_a} ||B||^2={norm_b} ||[A,B]_2||^2={norm_c} bound={bound}',
    )
