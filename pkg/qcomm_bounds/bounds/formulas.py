"""Closed-form bound coefficients and the f(t) counterexample family.

All coefficients c are in the normalized form ||[A,B]_q||^2 <= c ||A||^2 ||B||^2.
"""
import math
from typing import Tuple

from qcomm_bounds.exceptions import RegimeError
from qcomm_bounds.models import BoundRegime, BoundValue, MatrixClass


def bound_general_nonpositive(q: float) -> float:
    """(1-q)^2, sharp for arbitrary matrices when q <= 0."""
    if q > 0:
        raise RegimeError(f'(1-q)^2 bound requires q <= 0, got q={q}')
    return (1.0 - q) ** 2


def bound_normal_positive(q: float) -> float:
    """1+q^2, sharp when A or B is normal and q >= 0."""
    if q < 0:
        raise RegimeError(f'1+q^2 normal bound requires q >= 0, got q={q}')
    return 1.0 + q * q


def g(n: int) -> float:
    """(n^2 - 3n + 3) / (n(n-1)), the traceless diagonal counterexample constant."""
    if n < 2:
        raise RegimeError(f'g(n) requires n >= 2, got n={n}')
    return (n * n - 3 * n + 3) / (n * (n - 1))


def k(n: int) -> float:
    return math.sqrt((n - 2) * (n - 3) / (n * (n - 1)))


def q_crossover(n: int) -> Tuple[float, float]:
    """Negative-q interval on which g(n)(1-q)^2 >= 1+q^2.

    Raises:
        RegimeError: For n < 4, where the interval is empty.
    """
    if n < 4:
        raise RegimeError(f'Crossover interval requires n >= 4, got n={n}')
    kn = k(n)
    q_min = (-n * n * (kn + 1) + n * (kn + 3) - 3) / (2 * n - 3)
    q_max = (n * n * (kn - 1) - n * (kn - 3) - 3) / (2 * n - 3)
    return q_min, q_max


def bound_traceless(n: int, q: float) -> float:
    """Conjectured sharp coefficient when A or B is traceless."""
    if n < 2:
        raise RegimeError(f'Traceless bound requires n >= 2, got n={n}')
    if q > 0:
        return 1.0 + q * q
    return max(g(n) * (1.0 - q) ** 2, 1.0 + q * q)


def conjectured_bound(n: int, q: float, matrix_class: MatrixClass) -> BoundValue:
    """Bound coefficient for a constraint class, tagged with its regime.

    For general matrices and q > 0 no closed form is known; 1+q^2 is returned as a
    reference curve under ``GENERAL_POSITIVE_Q_REFERENCE``.
    Both traceless classes are compared against the traceless curve; with only A
    traceless the curve is exceeded for n >= 3 around q = -1.
    """
    if matrix_class.traceless_a:
        regime = BoundRegime.TRACELESS_CONJECTURE_POSITIVE_Q if q > 0 \
            else BoundRegime.TRACELESS_CONJECTURE_NONPOSITIVE_Q
        return BoundValue(coefficient=bound_traceless(n, q), regime=regime)
    if q <= 0:
        return BoundValue(coefficient=bound_general_nonpositive(q), regime=BoundRegime.GENERAL_NONPOSITIVE_Q)
    if matrix_class is MatrixClass.NORMAL_A:
        return BoundValue(coefficient=bound_normal_positive(q), regime=BoundRegime.NORMAL_EITHER_POSITIVE_Q)
    return BoundValue(coefficient=1.0 + q * q, regime=BoundRegime.GENERAL_POSITIVE_Q_REFERENCE)


def _check_f_domain(q: float):
    if q <= 0 or q == 1:
        raise RegimeError(f'f-family maximum requires q > 0 and q != 1, got q={q}')


def f_numerator(q: float, t: float) -> float:
    """||[A,B]_q||^2 for the f-family pair."""
    return t * t * (1 + q * q) + 2 * t * (1 + q) * (1 + q ** 3) + (1 - q) ** 2 * (1 + q ** 4)


def f_eval(q: float, t: float) -> float:
    """Ratio of the f-family pair as a function of t >= 0."""
    return f_numerator(q, t) / (t + q * q + 1) ** 2


def f_derivative(q: float, t: float) -> float:
    """df/dt = -2q(1-q)^2 (t - t_max) / (t + q^2 + 1)^3."""
    return 2 * q * ((3 * q ** 4 + 2 * q * q + 3) - (1 - q) ** 2 * t) / (t + q * q + 1) ** 3


def t_max(q: float) -> float:
    """Maximizer of f over t >= 0."""
    _check_f_domain(q)
    return (3 * q ** 4 + 2 * q * q + 3) / (1 - q) ** 2


def x_of_q(q: float) -> float:
    return q * (1 - q) ** 2 / (2 * (1 + q ** 4))


def h_of_q(q: float) -> float:
    return (1 + q) ** 2 / (2 * (1 + q * q))


def f_at_tmax(q: float) -> float:
    """Closed form of f(t_max) = (1 - h x)/(1 - x) * (1 + q^2)."""
    _check_f_domain(q)
    x, h = x_of_q(q), h_of_q(q)
    return (1 - h * x) / (1 - x) * (1 + q * q)
