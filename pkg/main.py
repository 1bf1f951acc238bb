#!/usr/bin/env python3
"""
Distance Seidel spectra toolkit - command-line entry point
One execute_<command> function per subcommand, JSON on stdout, diagnostics on stderr
"""
import argparse
import logging
import sys
import traceback

import config
from analyzers.bounds_analyzer import BoundsAnalyzer
from analyzers.family_analyzer import FamilyAnalyzer, FamilySpec
from analyzers.operation_analyzer import OperationAnalyzer
from analyzers.scan_analyzer import ScanAnalyzer, ScanOptions
from analyzers.spectrum_analyzer import SpectrumAnalyzer
from utils.catalog_loader import CatalogLoader
from utils.errors import (DisconnectedGraphError, GraphFormatError, InvalidParameterError,
                          InvariantViolation)
from utils.report_format import dump_json, dump_table, dump_text

logger = logging.getLogger(__name__)

INPUT_ERRORS = (GraphFormatError, DisconnectedGraphError, InvalidParameterError, OSError)


class ToolArgumentParser(argparse.ArgumentParser):
    """Usage errors become InvalidParameterError so they share the exit-code mapping"""

    def error(self, message):
        raise InvalidParameterError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', default='-', help="graph file, '-' for stdin")
    common.add_argument('--format', choices=['graph6', 'edges'], default='graph6')
    common.add_argument('--output', choices=['json', 'text', 'csv'], default='json')
    common.add_argument('--tol', type=float, default=config.GROUPING_TOLERANCE,
                        help='eigenvalue grouping tolerance')
    common.add_argument('--verbose', action='store_true')

    parser = ToolArgumentParser(prog='seidel', description='Distance Seidel spectra of graphs')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('spectrum', parents=[common], help='D^S spectral summary')
    commands.add_parser('analyze', parents=[common], help='summary, invariants and Wiener identity')

    bounds = commands.add_parser('bounds', parents=[common], help='evaluate every bound')
    bounds.add_argument('--edge-monotonicity', action='store_true')

    construct = commands.add_parser('construct', parents=[common], help='build an operation graph')
    construct.add_argument('--op', required=True, choices=config.OPERATION_NAMES)
    construct.add_argument('--inputs', nargs='+', required=True)
    construct.add_argument('--predict', action='store_true')

    family = commands.add_parser('family', parents=[common], help='closed form vs numeric')
    family.add_argument('--name', required=True, choices=list(config.FAMILY_NAMES))
    family.add_argument('--params', nargs='*', type=int, default=[])

    scan = commands.add_parser('scan', parents=[common], help='scan a graph6 catalog')
    scan.add_argument('--jobs', type=int, default=config.DEFAULT_JOBS)
    scan.add_argument('--find', default='', help=f"comma list of {','.join(config.FIND_OPTIONS)}")
    scan.add_argument('--verify', default='', help=f"comma list of {','.join(config.VERIFY_OPTIONS)}")
    scan.add_argument('--generate', type=int, metavar='N',
                      help='scan all connected graphs of order <= N instead of --input')

    deletion = commands.add_parser('edge-deletion', parents=[common], help='E(K_ab - e) vs E(K_ab)')
    deletion.add_argument('--a', type=int, required=True)
    deletion.add_argument('--b', type=int, required=True)
    return parser


def _options(text):
    return frozenset(item.strip() for item in text.split(',') if item.strip())


def execute_spectrum(args, loader):
    graph = loader.load_graph(args.input, args.format)
    return SpectrumAnalyzer(args.tol).process(graph), None


def execute_analyze(args, loader):
    graph = loader.load_graph(args.input, args.format)
    return SpectrumAnalyzer(args.tol).process(graph, detail='analyze'), None


def execute_bounds(args, loader):
    graph = loader.load_graph(args.input, args.format)
    result = BoundsAnalyzer(args.edge_monotonicity).process(graph)
    return result, result['bounds']


def execute_construct(args, loader):
    inputs = [loader.load_graph(path, args.format) for path in args.inputs]
    return OperationAnalyzer().process(args.op, inputs, predict=args.predict), None


def execute_family(args, loader):
    spec = FamilySpec.from_cli(args.name, args.params)
    result = FamilyAnalyzer(args.tol).process(spec)
    rows = ([dict(source='closedForm', **g) for g in result['closedForm']] +
            [dict(source='numeric', **g) for g in result['numeric']])
    return result, rows


def execute_scan(args, loader):
    options = ScanOptions(find=_options(args.find), verify=_options(args.verify),
                          jobs=args.jobs, tol=args.tol)
    lines = loader.load_catalog(None if args.generate else args.input, generate=args.generate)
    result, report = ScanAnalyzer(options).process(list(loader.iter_graphs(lines)))
    return result, report.rows


def execute_edge_deletion(args, loader):
    return BoundsAnalyzer().process_edge_deletion(args.a, args.b), None


COMMANDS = {
    'spectrum': execute_spectrum,
    'analyze': execute_analyze,
    'bounds': execute_bounds,
    'construct': execute_construct,
    'family': execute_family,
    'scan': execute_scan,
    'edge-deletion': execute_edge_deletion,
}


def render(result, rows, output):
    if output == 'csv':
        if rows is None:
            raise InvalidParameterError("csv output is available for scan, bounds and family")
        return dump_table(rows, 'csv')
    if output == 'text':
        return dump_text(result)
    return dump_json(result)


def run(argv):
    """Parse argv, run one subcommand, write its report; returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
        level = logging.INFO if args.verbose else config.LOG_LEVEL
        logging.basicConfig(stream=sys.stderr, level=level,
                            format='%(levelname)s %(name)s: %(message)s')

        result, rows = COMMANDS[args.command](args, CatalogLoader())
        stamp = result.pop('timestamp', None)
        logger.info(f"{args.command} finished at {stamp}")
        sys.stdout.write(render(result, rows, args.output))
        return 0

    except SystemExit as e:
        return e.code or 0
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except InvariantViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"Error: {str(e)}\n{traceback.format_exc()}")
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
