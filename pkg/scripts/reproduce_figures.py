#!/usr/bin/env python3
"""Write the data behind the three bound figures, plus analytic curves, into a directory."""
import logging
import sys
from os import makedirs, path

import pandas as pd

from qcomm_bounds.commands.curves import curve_record
from qcomm_bounds.models import MatrixClass, OptConfig
from qcomm_bounds.optimizer import q_grid, sweep_n, sweep_q

# traceless figures constrain both A and B; traceless_one_sided shows the curve
# failing once B is free
FIGURES = {
    'general': (MatrixClass.GENERAL, (2, 3, 4), (-3.0, 3.0, 61)),
    'traceless_positive': (MatrixClass.TRACELESS_BOTH, (2, 3, 4, 5), (0.1, 3.0, 30)),
    'traceless_negative': (MatrixClass.TRACELESS_BOTH, (2, 3, 4), (-3.0, 0.0, 31)),
    'traceless_one_sided': (MatrixClass.TRACELESS_A, (3, 4), (-3.0, 0.0, 31)),
}

DIMENSION_SWEEPS = {
    'traceless_n_dependence': (MatrixClass.TRACELESS_BOTH, -1.0, range(2, 11)),
    'general_n_dependence': (MatrixClass.GENERAL, 2.0, range(2, 11)),
}


def _write(df: pd.DataFrame, out_path: str):
    df.to_csv(out_path, index=False, float_format='%.17g', lineterminator='\n', na_rep='nan')


def reproduce(out_dir: str, restarts: int = 16, seed: int = 0):
    makedirs(out_dir, exist_ok=True)
    for name, (matrix_class, dims, grid) in FIGURES.items():
        qs = q_grid(*grid)
        frames = []
        for n in dims:
            template = OptConfig(n=n, q=0.0, matrix_class=matrix_class, restarts=restarts, seed=seed)
            rows = sweep_q(n, qs, matrix_class, template)
            frames.append(pd.DataFrame.from_records([row.as_record() for row in rows]))
            curves = pd.DataFrame.from_records([curve_record(n, float(q)) for q in qs])
            _write(curves, path.join(out_dir, f'curves_n{n}_{name}.csv'))
        df = pd.concat(frames, ignore_index=True)
        _write(df, path.join(out_dir, f'{name}.csv'))
        print(name, len(df))

    for name, (matrix_class, q, dims) in DIMENSION_SWEEPS.items():
        template = OptConfig(n=max(dims), q=q, matrix_class=matrix_class, restarts=restarts, seed=seed)
        rows = sweep_n(dims, q, matrix_class, template)
        df = pd.DataFrame.from_records([row.as_record() for row in rows])
        _write(df, path.join(out_dir, f'{name}.csv'))
        print(name, len(df))


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    print("Reproducing figure data...")
    reproduce(sys.argv[1] if len(sys.argv) > 1 else 'figures')
