import argparse
import logging
import sys

from pydantic import ValidationError

from qcomm_bounds import __version__
from qcomm_bounds.commands import COMMANDS
from qcomm_bounds.commands.utils import EXIT_NUMERICAL, EXIT_USAGE
from qcomm_bounds.config import LOG_LEVEL, thread_count
from qcomm_bounds.exceptions import OptimizerError, QCommError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qcomm',
        description='Sharp Frobenius-norm bounds for the q-deformed commutator AB - qBA.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)
    # Register every sub-command
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command and map failures to exit codes."""
    try:
        thread_count()
        return args.func(args)
    except OptimizerError as e:
        logger.error(f'Optimizer failed at q={e.q!r}, restart {e.restart_index}: {e}')
        return EXIT_NUMERICAL
    except (ValidationError, ValueError) as e:
        # RegimeError, DimensionMismatchError and bad QCOMM_* settings land here
        logger.error(f'Invalid arguments for {args.command}: {e}')
        return EXIT_USAGE
    except QCommError as e:
        logger.error(f'Numerical failure in {args.command}: {e}')
        return EXIT_NUMERICAL


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=LOG_LEVEL.upper(),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == '__main__':
    sys.exit(main())
