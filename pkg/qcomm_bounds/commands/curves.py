import argparse
import math

from qcomm_bounds.bounds import bound_traceless, f_at_tmax, g
from qcomm_bounds.commands.utils import EXIT_OK, add_grid_arguments, add_output_arguments, build_manifest, \
    emit, now, positive_int
from qcomm_bounds.optimizer import q_grid

CURVE_COLUMNS = ['q', 'one_minus_q_sq', 'one_plus_q_sq', 'g_n_one_minus_q_sq', 'traceless_bound', 'f_at_tmax']


def curve_record(n: int, q: float) -> dict:
    return {
        'q': q,
        'one_minus_q_sq': (1 - q) ** 2,
        'one_plus_q_sq': 1 + q * q,
        'g_n_one_minus_q_sq': g(n) * (1 - q) ** 2,
        'traceless_bound': bound_traceless(n, q),
        'f_at_tmax': f_at_tmax(q) if q > 0 and q != 1 else math.nan,
    }


def cmd_curves(args: argparse.Namespace) -> int:
    """Analytic reference curves on a q-grid; no optimization."""
    started = now()
    records = [curve_record(args.n, float(q)) for q in q_grid(args.q_from, args.q_to, args.q_steps)]
    emit(records, CURVE_COLUMNS, args.out, args.format, build_manifest('curves', args, started))
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('curves', help='analytic bound curves for overlay plots')
    parser.add_argument('--n', type=positive_int, default=4)
    add_grid_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(func=cmd_curves)
