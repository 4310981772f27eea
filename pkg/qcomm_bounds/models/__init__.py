# flake8: noqa
from qcomm_bounds.models.common import BoundRegime, EigenBackend, MatrixClass
from qcomm_bounds.models.optimization import MAX_DIMENSION, OptConfig, OptResult, SweepRow
from qcomm_bounds.models.reports import BoundValue, CheckReport, RunManifest, WitnessPair
