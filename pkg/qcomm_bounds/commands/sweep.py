import argparse

from qcomm_bounds.commands.utils import EXIT_OK, SWEEP_COLUMNS, add_class_argument, add_grid_arguments, \
    add_output_arguments, build_manifest, emit, now, positive_int
from qcomm_bounds.config import DEFAULT_RESTARTS
from qcomm_bounds.models import MatrixClass, OptConfig
from qcomm_bounds.optimizer import q_grid, sweep_q


def cmd_sweep(args: argparse.Namespace) -> int:
    """Maximize the ratio on a q-grid and write figure-ready rows."""
    started = now()
    matrix_class = MatrixClass.from_str(args.matrix_class)
    template = OptConfig(
        n=args.n, q=0.0, matrix_class=matrix_class, restarts=args.restarts,
        max_alternations=args.max_alternations, seed=args.seed,
    )
    rows = sweep_q(
        args.n, q_grid(args.q_from, args.q_to, args.q_steps), matrix_class, template,
        seed_witness=args.seed_witness,
    )
    manifest = build_manifest('sweep', args, started)
    emit([row.as_record() for row in rows], SWEEP_COLUMNS, args.out, args.format, manifest)
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('sweep', help='numerical maximum of the ratio along a q-grid')
    parser.add_argument('--n', type=positive_int, required=True)
    add_class_argument(parser)
    add_grid_arguments(parser)
    parser.add_argument('--restarts', type=positive_int, default=DEFAULT_RESTARTS)
    parser.add_argument('--max-alternations', type=positive_int, default=500)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--seed-witness', action=argparse.BooleanOptionalAction, default=True,
                        help='start one restart per point at the best known pair')
    add_output_arguments(parser)
    parser.set_defaults(func=cmd_sweep)
