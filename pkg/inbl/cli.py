"""Command-line interface."""

import argparse
import contextlib
import json
import sys

import jsonschema

from . import __version__
from .circuit import load_circuit
from .constants import ExitCode, GateKind
from .errors import (ArgumentError, CircuitParseError, DimensionError,
                     ScheduleError)
from .logic import subspace_count, subspace_count_by_summation
from .runner import RunOptions, demo, run_circuit
from .settings import Settings
from .verifier import orthogonality_suite


# Binomial summation is only cross-checked up to this size.
_SUMMATION_LIMIT = 10

# Largest N whose subspace count is printed; 2^(2^20) has 315653 digits.
_SUBSPACE_LIMIT = 20


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be >= 1: {}'.format(text))

    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError('seed out of 64-bit range')

    return value


def build_parser(settings):
    """
    Build the argument parser.

    settings -- dictionary of defaults from Settings.load()
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='print reports as JSON')
    common.add_argument('-v', '--verbose', action='store_true',
                        default=settings['verbose'],
                        help='trace gate operations on stderr')

    parser = argparse.ArgumentParser(
        prog='inbl',
        description='Instantaneous noise-based logic over random telegraph '
                    'waves.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', parents=[common],
                         help='run a circuit file')
    run.add_argument('file', help='circuit file')
    run.add_argument('--seed', type=_seed, default=None,
                     help="override the file's seed")
    run.add_argument('--verify-signal', type=_positive, metavar='M',
                     help='check against the signal simulator over M cycles')
    run.add_argument('--stats', type=_positive, metavar='M',
                     help='run statistical presence checks over M cycles')
    run.add_argument('--dump-waveform', metavar='PATH',
                     help='write the output waveform as CSV')
    run.add_argument('--cycles', type=_positive, metavar='M',
                     default=settings['cycles'],
                     help='number of waveform cycles to dump')

    demo_parser = sub.add_parser('demo', parents=[common],
                                 help='trace the canonical XOR/XNOR gate')
    demo_parser.add_argument('gate', choices=[GateKind.XOR, GateKind.XNOR])
    demo_parser.add_argument('--seed', type=_seed, default=0)

    subspaces = sub.add_parser('subspaces', parents=[common],
                               help='count the subspaces of N noise-bits')
    subspaces.add_argument('n_bits', type=_positive, metavar='N')

    ortho = sub.add_parser('orthogonality', parents=[common],
                           help='check generator means over M cycles')
    ortho.add_argument('n_bits', type=_positive, metavar='N')
    ortho.add_argument('cycles', type=_positive, metavar='M')
    ortho.add_argument('--seed', type=_seed, default=0)

    return parser


def _emit(args, report):
    print(report.to_json() if args.json else report)


def _cmd_run(args, settings):
    circuit = load_circuit(args.file)
    options = RunOptions(
        seed=args.seed,
        verify_signal=args.verify_signal,
        stats=args.stats,
        dump_waveform=args.dump_waveform,
        cycles=args.cycles,
        retries=settings['retries'],
        verbose=args.verbose,
    )
    report = run_circuit(circuit, options)
    _emit(args, report)
    return report.exit_code


def _cmd_demo(args, settings):
    _emit(args, demo(args.gate, seed=args.seed))
    return ExitCode.OK


@contextlib.contextmanager
def _unlimited_int_digits():
    # Interpreters with the int-to-str digit limit refuse larger counts.
    if not hasattr(sys, 'set_int_max_str_digits'):
        yield
        return

    limit = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(limit)


def _cmd_subspaces(args, settings):
    if args.n_bits > _SUBSPACE_LIMIT:
        raise ArgumentError('subspace count is only printed for N <= {}: {}'
                            .format(_SUBSPACE_LIMIT, args.n_bits))

    count = subspace_count(args.n_bits)
    summed = None
    if args.n_bits <= _SUMMATION_LIMIT:
        summed = subspace_count_by_summation(args.n_bits)

    with _unlimited_int_digits():
        if args.json:
            print(json.dumps({'bits': args.n_bits, 'subspaces': count,
                              'summation': summed}))
        else:
            print(count)
            if summed is not None and summed != count:
                print('binomial summation disagrees: {}'.format(summed))

    if summed is not None and summed != count:
        return ExitCode.VERIFICATION_FAILED

    return ExitCode.OK


def _cmd_orthogonality(args, settings):
    report = orthogonality_suite(args.seed, args.n_bits, args.cycles,
                                 retries=settings['retries'])
    _emit(args, report)
    return ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED


_COMMANDS = {
    'run': _cmd_run,
    'demo': _cmd_demo,
    'subspaces': _cmd_subspaces,
    'orthogonality': _cmd_orthogonality,
}


def main(argv=None):
    """
    Run the command line interface.

    argv -- argument list, defaulting to sys.argv[1:]

    Returns the process exit code.
    """
    try:
        settings = Settings().load()
    except (OSError, ValueError, jsonschema.ValidationError) as e:
        print('inbl: invalid settings file: {}'.format(e), file=sys.stderr)
        return ExitCode.USAGE_ERROR

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        return _COMMANDS[args.command](args, settings)
    except CircuitParseError as e:
        print('{}: {}'.format(getattr(args, 'file', 'inbl'), e),
              file=sys.stderr)
    except (ArgumentError, DimensionError, ScheduleError, OSError) as e:
        print('inbl: {}'.format(e), file=sys.stderr)

    return ExitCode.USAGE_ERROR


if __name__ == '__main__':
    sys.exit(main())
