import argparse

from qcomm_bounds.bounds import bound_traceless, g, ratio, witness_by_family
from qcomm_bounds.commands.utils import EXIT_OK, finite_float, positive_int
from qcomm_bounds.matcore import frobenius_norm_sq, q_commutator

ATTAIN_TOL = 1e-10
FAMILIES = ['kyfan', 'projector', 'ftmax', 'diag', 'traceless', 'traceless-both', 'one-sided']
TRACELESS_FAMILIES = ('diag', 'traceless', 'traceless-both', 'one-sided')


def reference_bound(family: str, n: int, q: float) -> float:
    """Coefficient the family attains or breaks."""
    if family == 'projector':
        return (1.0 - q) ** 2
    return 1.0 + q * q


def classify(value: float, bound: float) -> str:
    if abs(value - bound) <= ATTAIN_TOL * max(bound, 1.0):
        return 'attains'
    return 'violates' if value > bound else 'below'


def cmd_witness(args: argparse.Namespace) -> int:
    """Print a witness or counterexample pair with its exact ratio."""
    witness = witness_by_family(args.family, args.n, args.q, args.t)
    norm_a, norm_b = frobenius_norm_sq(witness.A), frobenius_norm_sq(witness.B)
    norm_c = frobenius_norm_sq(q_commutator(witness.A, witness.B, args.q))
    value = ratio(witness.A, witness.B, args.q)
    bound = reference_bound(args.family, args.n, args.q)

    print(f'family: {witness.label}')
    print(f'n: {args.n}')
    print(f'q: {args.q!r}')
    if args.t is not None:
        print(f't: {args.t!r}')
    print(f'A_norm_sq: {norm_a!r}')
    print(f'B_norm_sq: {norm_b!r}')
    print(f'commutator_norm_sq: {norm_c!r}')
    print(f'ratio: {value!r}')
    print(f'expected_ratio: {witness.expected_ratio!r}')
    print(f'reference_bound: {bound!r}')
    print(f'reference_bound_scaled: {bound * norm_a * norm_b!r}')
    print(f'status: {classify(value, bound)}')
    if args.family == 'diag':
        print(f'g_n_one_minus_q_sq: {g(args.n) * (1 - args.q) ** 2!r}')
    if args.family in TRACELESS_FAMILIES:
        traceless = bound_traceless(args.n, args.q)
        print(f'traceless_bound: {traceless!r}')
        print(f'traceless_status: {classify(value, traceless)}')
    return EXIT_OK


def register(subparsers):
    parser = subparsers.add_parser('witness', help='evaluate a sharpness witness or counterexample')
    parser.add_argument('--family', choices=FAMILIES, required=True)
    parser.add_argument('--n', type=positive_int, default=2)
    parser.add_argument('--q', type=finite_float, required=True)
    parser.add_argument('--t', type=finite_float, default=None, help='f-family parameter (default t_max)')
    parser.set_defaults(func=cmd_witness)
