import argparse
import json

import numpy as np

from qcomm_bounds.commands.utils import EXIT_OK, add_class_argument, build_manifest, finite_float, now, \
    positive_int, write_manifest, write_text
from qcomm_bounds.config import DEFAULT_RESTARTS
from qcomm_bounds.models import MatrixClass, OptConfig, OptResult
from qcomm_bounds.optimizer import maximize_ratio, seed_with_witness


def _matrix_text(X: np.ndarray) -> str:
    return np.array2string(X, floatmode='unique', max_line_width=200)


def _matrix_json(X: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in X]


def result_payload(result: OptResult) -> dict:
    return {
        'best_ratio': result.best_ratio,
        'A': _matrix_json(result.A),
        'B': _matrix_json(result.B),
        'alternations_used': result.alternations_used,
        'restart_index': result.restart_index,
        'converged': result.converged,
        'converged_restarts': result.converged_restarts,
        'witness_ratio': result.witness_ratio,
    }


def cmd_maximize(args: argparse.Namespace) -> int:
    """Single (n, q, class) maximization printed at full precision."""
    started = now()
    cfg = OptConfig(
        n=args.n, q=args.q, matrix_class=MatrixClass.from_str(args.matrix_class),
        restarts=args.restarts, max_alternations=args.max_alternations, seed=args.seed,
    )
    result = seed_with_witness(cfg) if args.seed_witness else maximize_ratio(cfg)

    print(f'best_ratio: {result.best_ratio!r}')
    print(f'restart_index: {result.restart_index}')
    print(f'alternations_used: {result.alternations_used}')
    print(f'converged: {result.converged} ({result.converged_restarts}/{cfg.restarts} restarts)')
    if result.witness_ratio is not None:
        print(f'witness_ratio: {result.witness_ratio!r}')
    print(f'A =\n{_matrix_text(result.A)}')
    print(f'B =\n{_matrix_text(result.B)}')

    if args.json:
        manifest = build_manifest('maximize', args, started)
        manifest.output_paths = [args.json, f'{args.json}.manifest.json']
        manifest.finished = now()
        payload = {'manifest': manifest.model_dump(mode='json'), 'result': result_payload(result)}
        write_text(args.json, json.dumps(payload, indent=2) + '\n')
        write_manifest(manifest, f'{args.json}.manifest.json')
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('maximize', help='single ratio maximization')
    parser.add_argument('--n', type=positive_int, required=True)
    parser.add_argument('--q', type=finite_float, required=True)
    add_class_argument(parser)
    parser.add_argument('--restarts', type=positive_int, default=DEFAULT_RESTARTS)
    parser.add_argument('--max-alternations', type=positive_int, default=500)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--seed-witness', action=argparse.BooleanOptionalAction, default=False)
    parser.add_argument('--json', default=None, help='dump the result and manifest as JSON')
    parser.set_defaults(func=cmd_maximize)
