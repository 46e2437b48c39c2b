"""
Command-line front end.

    cellnet count M 3 3
    cellnet table H 6 6 --format markdown
    cellnet reduce network.json
    cellnet equiv a.json b.json --oracle
    cellnet verify 3 2 --format json
    cellnet enumerate 3 1 --connected --minimal
    cellnet expand network.json 4

Results go to stdout, logs and diagnostics to stderr. Exit statuses: 0 on
success (or "equivalent"), 1 for "not-equivalent" or failed verification
checks, 2 on invalid input or an exceeded budget, 3 when the two
equivalence deciders disagree.
"""
import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Tuple

from app.combinatorics.counting import FAMILIES, count
from app.combinatorics.tables import TABLE_FORMATS, fill_table
from app.config.settings import config_errors
from app.network.codec import dumps, load_file
from app.network.equivalence import are_ode_equivalent, linear_equiv_oracle
from app.network.network import degree, equivalent_expansions, reduce
from app.oracle.census import isomorphism_classes
from app.oracle.verification import verify
from app.utils.logger import get_logger, set_log_level
from app.utils.validation import InternalConsistencyError, ValidationError

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_DISAGREEMENT = 3


def positive_int(text: str) -> int:
    """argparse type for integers >= 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def cmd_count(args: argparse.Namespace) -> int:
    print(count(args.family, args.n, args.r))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    table = fill_table(args.family, args.max_n, args.max_r, workers=args.workers)
    sys.stdout.write(table.render(args.format or 'csv'))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    G = load_file(args.path)
    reduced, trace = reduce(G)
    print(dumps(reduced))
    print(json.dumps(trace.to_dict(), separators=(',', ':')))
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    first = load_file(args.path_a)
    second = load_file(args.path_b)
    verdict = are_ode_equivalent(first, second)
    if args.oracle and first.n == second.n:
        if linear_equiv_oracle(first, second) != verdict:
            raise InternalConsistencyError(
                f"deciders disagree on {args.path_a} and {args.path_b}"
            )
    print('equivalent' if verdict else 'not-equivalent')
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify(args.n, args.r, workers=args.workers, budget=args.budget)
    sys.stdout.write(report.to_json() if args.format == 'json' else report.to_text())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_enumerate(args: argparse.Namespace) -> int:
    classes = isomorphism_classes(
        args.n, args.r,
        connected=args.connected,
        minimal=args.minimal,
        workers=args.workers,
        budget=args.budget,
    )
    for G in classes:
        print(dumps(G))
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    reduced, _ = reduce(load_file(args.path))
    if degree(reduced) == 0:
        raise ValidationError(f"{args.path} reduces to degree 0 and has no expansions")
    for G in equivalent_expansions(reduced, args.degree):
        print(dumps(G))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    'count': cmd_count,
    'table': cmd_table,
    'reduce': cmd_reduce,
    'equiv': cmd_equiv,
    'verify': cmd_verify,
    'enumerate': cmd_enumerate,
    'expand': cmd_expand,
}

# --format values each command can produce; verify prints text when the flag is absent
COMMAND_FORMATS: Dict[str, Tuple[str, ...]] = {
    'table': TABLE_FORMATS,
    'verify': ('json',),
}


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per entry in COMMANDS; shared flags go after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=TABLE_FORMATS, default=None,
                        help='output format (table: csv, markdown or json, csv by default; verify: json, text by default)')
    common.add_argument('--budget', type=positive_int, default=None,
                        help='largest |Omega(n,r)| the oracle may enumerate')
    common.add_argument('--oracle', action='store_true',
                        help='cross-check equivalence with the linear decider')
    common.add_argument('--workers', type=positive_int, default=None,
                        help='worker threads (tables) or processes (oracle)')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='log level for stderr and log files')

    parser = argparse.ArgumentParser(
        prog='cellnet',
        description='Exact counting and equivalence of identical-edge homogeneous networks.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('count', parents=[common], help='print H, K or M at (n, r)')
    p.add_argument('family', choices=FAMILIES)
    p.add_argument('n', type=positive_int)
    p.add_argument('r', type=positive_int)

    p = subparsers.add_parser('table', parents=[common], help='print a count table')
    p.add_argument('family', choices=FAMILIES)
    p.add_argument('max_n', type=positive_int)
    p.add_argument('max_r', type=positive_int)

    p = subparsers.add_parser('reduce', parents=[common], help='reduce a network document')
    p.add_argument('path')

    p = subparsers.add_parser('equiv', parents=[common], help='decide ODE equivalence')
    p.add_argument('path_a')
    p.add_argument('path_b')

    p = subparsers.add_parser('verify', parents=[common], help='check counts against the census')
    p.add_argument('n', type=positive_int)
    p.add_argument('r', type=positive_int)

    p = subparsers.add_parser('enumerate', parents=[common], help='list isomorphism classes')
    p.add_argument('n', type=positive_int)
    p.add_argument('r', type=positive_int)
    p.add_argument('--connected', action='store_true', help='only weakly connected classes')
    p.add_argument('--minimal', action='store_true', help='only reduced classes')

    p = subparsers.add_parser('expand', parents=[common],
                              help='list the degree-r networks equivalent to a network')
    p.add_argument('path')
    p.add_argument('degree', type=positive_int)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv (Optional[List[str]]): Arguments without the program name, defaults to sys.argv[1:]

    Returns:
        int: Exit status
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is not None and args.format not in COMMAND_FORMATS.get(args.command, ()):
        parser.error(f"{args.command} does not support --format {args.format}")
    if args.log_level:
        set_log_level(args.log_level)

    errors = config_errors()
    if errors:
        for error in errors:
            print(f"error: invalid setting {error}", file=sys.stderr)
        return EXIT_ERROR

    try:
        return COMMANDS[args.command](args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except InternalConsistencyError as e:
        logger.exception(f"Internal consistency failure: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_DISAGREEMENT


if __name__ == '__main__':
    sys.exit(main())
