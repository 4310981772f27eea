import argparse

from qcomm_bounds.commands.utils import EXIT_OK, SWEEP_COLUMNS, add_class_argument, add_output_arguments, \
    build_manifest, emit, finite_float, now, positive_int
from qcomm_bounds.config import DEFAULT_RESTARTS
from qcomm_bounds.models import MatrixClass, OptConfig
from qcomm_bounds.optimizer import sweep_n


def cmd_nsweep(args: argparse.Namespace) -> int:
    """Maximize the ratio for each n in [n_from, n_to] at one q."""
    if args.n_from > args.n_to:
        raise ValueError(f'--n-from ({args.n_from}) must not exceed --n-to ({args.n_to})')
    started = now()
    matrix_class = MatrixClass.from_str(args.matrix_class)
    template = OptConfig(
        n=args.n_to, q=args.q, matrix_class=matrix_class, restarts=args.restarts,
        max_alternations=args.max_alternations, seed=args.seed,
    )
    rows = sweep_n(range(args.n_from, args.n_to + 1), args.q, matrix_class, template,
                   seed_witness=args.seed_witness)
    manifest = build_manifest('nsweep', args, started)
    emit([row.as_record() for row in rows], SWEEP_COLUMNS, args.out, args.format, manifest)
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('nsweep', help='numerical maximum of the ratio along a range of dimensions')
    parser.add_argument('--n-from', type=positive_int, default=2)
    parser.add_argument('--n-to', type=positive_int, required=True)
    parser.add_argument('--q', type=finite_float, required=True)
    add_class_argument(parser)
    parser.add_argument('--restarts', type=positive_int, default=DEFAULT_RESTARTS)
    parser.add_argument('--max-alternations', type=positive_int, default=500)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--seed-witness', action=argparse.BooleanOptionalAction, default=True,
                        help='start one restart per dimension at the best known pair')
    add_output_arguments(parser)
    parser.set_defaults(func=cmd_nsweep)
