"""Unit test package for qcomm_bounds."""
