import argparse
import logging

from qcomm_bounds.commands.utils import EXIT_CHECK_FAILED, EXIT_OK, build_manifest, emit, now, positive_int
from qcomm_bounds.verify import run_conjecture_suite, run_proof_suite

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ['suite', 'name', 'trials', 'worst_violation', 'tolerance', 'passed', 'details']


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the proof and/or conjecture suites; exit 0 iff every proved statement holds."""
    started = now()
    records, proofs_ok = [], True
    if args.suite in ('proofs', 'all'):
        reports = run_proof_suite(trials=args.trials, seed=args.seed)
        proofs_ok = all(r.passed for r in reports)
        records += [{'suite': 'proofs', **r.model_dump()} for r in reports]
        for r in reports:
            print(r.summary_line())
    if args.suite in ('conjectures', 'all'):
        reports = run_conjecture_suite(n_max=args.n_max, restarts=args.restarts, seed=args.seed)
        records += [{'suite': 'conjectures', **r.model_dump()} for r in reports]
        for r in reports:
            print(r.summary_line())
        if not all(r.passed for r in reports):
            logger.error('Optimizer found ratios above a conjectured bound; see FAIL lines')

    if args.out:
        emit(records, REPORT_COLUMNS, args.out, 'csv', build_manifest('verify', args, started))
    return EXIT_OK if proofs_ok else EXIT_CHECK_FAILED


def register(subparsers):
    parser = subparsers.add_parser('verify', help='run proof fuzz checks and conjecture comparisons')
    parser.add_argument('--suite', choices=['proofs', 'conjectures', 'all'], default='proofs')
    parser.add_argument('--trials', type=positive_int, default=10000)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--n-max', type=positive_int, default=4)
    parser.add_argument('--restarts', type=positive_int, default=16)
    parser.add_argument('--out', default=None, help='CSV file of all reports')
    parser.set_defaults(func=cmd_verify)
