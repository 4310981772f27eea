import os

from starlette.config import Config

config = Config()
EIGEN_BACKEND = config('QCOMM_EIGEN_BACKEND', default='lapack')
LOG_LEVEL = config('QCOMM_LOG_LEVEL', default='INFO')
DEFAULT_RESTARTS = config('QCOMM_RESTARTS', cast=int, default=64)


def thread_count() -> int:
    """Worker cap for restarts and q-grid points, read from the live environment.

    Raises:
        ValueError: If QCOMM_THREADS is not a positive integer.
    """
    threads = config('QCOMM_THREADS', cast=int, default=os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f'QCOMM_THREADS must be a positive integer, got {threads}')
    return threads
