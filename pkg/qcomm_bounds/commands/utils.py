import argparse
import json
import logging
import math
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from qcomm_bounds import __version__
from qcomm_bounds.models import MatrixClass, RunManifest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

SWEEP_COLUMNS = ['q', 'n', 'class', 'max_ratio', 'conjectured_bound', 'gap', 'converged_restarts']


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {value}')
    return number


def finite_float(value: str) -> float:
    number = float(value)
    if not math.isfinite(number):
        raise argparse.ArgumentTypeError(f'expected a finite number, got {value}')
    return number


def add_class_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        '--class', dest='matrix_class', default=MatrixClass.GENERAL.value,
        choices=[c.value for c in MatrixClass], help='constraint class of the pair',
    )


def add_grid_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--q-from', type=finite_float, default=-3.0)
    parser.add_argument('--q-to', type=finite_float, default=3.0)
    parser.add_argument('--q-steps', type=positive_int, default=61)


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--out', default=None, help='output file; stdout when omitted')
    parser.add_argument('--format', choices=['csv', 'json'], default='csv')


def now() -> datetime:
    return datetime.now(timezone.utc)


def build_manifest(command: str, args: argparse.Namespace, started: datetime) -> RunManifest:
    """Echo of every parsed flag except the dispatch function."""
    config = {k: v for k, v in vars(args).items() if k != 'func'}
    return RunManifest(
        command=command,
        config=config,
        artifact_version=__version__,
        seed=config.get('seed'),
        started=started,
    )


def _json_safe(records: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
    return [
        {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in record.items()}
        for record in records
    ]


def render_table(records: List[Dict[str, Any]], columns: Sequence[str], fmt: str, manifest: RunManifest) -> str:
    """CSV with 17 significant digits, or a JSON object {manifest, rows}."""
    if fmt == 'json':
        payload = {'manifest': manifest.model_dump(mode='json'), 'rows': _json_safe(records)}
        return json.dumps(payload, indent=2) + '\n'
    df = pd.DataFrame.from_records(records, columns=list(columns))
    return df.to_csv(index=False, float_format='%.17g', lineterminator='\n', na_rep='nan')


def write_text(path: str, body: str):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(body)


def emit(records: List[Dict[str, Any]], columns: Sequence[str], out: str | None, fmt: str,
         manifest: RunManifest):
    """Write the table and its manifest; without a path the table goes to stdout."""
    if out:
        manifest_path = f'{out}.manifest.json'
        manifest.output_paths = [str(Path(out)), manifest_path]
        manifest.finished = now()
        write_text(out, render_table(records, columns, fmt, manifest))
        write_manifest(manifest, manifest_path)
        logger.info(f'Wrote {len(records)} rows to {out}')
    else:
        manifest.finished = now()
        sys.stdout.write(render_table(records, columns, fmt, manifest))
        logger.info(f'Run manifest: {manifest.model_dump_json()}')


def write_manifest(manifest: RunManifest, path: str):
    write_text(path, manifest.model_dump_json(indent=2) + '\n')
