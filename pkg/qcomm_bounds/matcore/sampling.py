"""Seeded complex Gaussian samplers.

Every sampler takes a ``numpy.random.Generator``; :func:`make_rng` derives
independent, reproducible sub-streams from a base seed and stream indices.
"""
import numpy as np


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Generator for the sub-stream (seed, *stream)."""
    return np.random.default_rng([seed, *stream])


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """i.i.d. standard complex Gaussian entries, E|z|^2 = 1."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    return complex_gaussian(rng, (n, n))


def random_traceless(n: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian matrix with (tr/n) I removed."""
    A = random_matrix(n, rng)
    A -= (np.trace(A) / n) * np.eye(n)
    return A


def random_normal_diag(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random complex diagonal matrix, the unitary-orbit representative of a normal A."""
    return np.diag(complex_gaussian(rng, n))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a Gaussian matrix."""
    Q, R = np.linalg.qr(random_matrix(n, rng))
    d = np.diag(R)
    return Q * (d / np.abs(d))
