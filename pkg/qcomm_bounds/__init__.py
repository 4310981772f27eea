"""Top-level package for the q-commutator bounds laboratory."""

__author__ = """QComm Bounds Developers"""
__email__ = 'qcomm-bounds@email.com'
__version__ = '0.1.0'
