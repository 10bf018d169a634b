"""
Command-line front end.

Results go to standard output, diagnostics and logs to standard error. The
exit code is 0 on success, 1 on a domain or file error, 2 on a usage error,
and 3 when an equivalence does not hold or a property check fails.
"""

import argparse
import logging
import sys

from defarg import __version__
from defarg.analysis.equivalence import EquivalenceKind
from defarg.analysis.reasons import ReasonKind, reasons
from defarg.commons.solver_factory import solver_factory
from defarg.formats.parsers import load_graph
from defarg.formats.results import (ExtensionsResult,
                                    DefenseExtensionsResult, ReasonsResult)
from defarg.formats.writers import (to_dot, to_json, format_text, write_tgf,
                                    write_apx)
from defarg.model.constants import (Semantics, SOLVERS, GRAPH_FORMATS,
                                    EDGE_PROBABILITIES,
                                    DEFAULT_MAX_ARGUMENTS,
                                    DEFAULT_MAX_DEFENSES)
from defarg.model.defense_graph import build_defense_graph
from defarg.model.exceptions import DefargError
from defarg.model.options import Options, LOG_LEVELS
from defarg.oracle.corpus import random_graphs, random_dags
from defarg.semantics.argument_semantics import extensions
from defarg.semantics.defense_semantics import defense_extensions
from defarg.workflows.check_workflow import check_workflow
from defarg.workflows.equivalence_workflow import equivalence_workflow

logger = logging.getLogger('defarg')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


def _render(result, options) -> str:
    if options['output_format'] == 'json':
        return to_json(result) + '\n'
    return format_text(result)


def _load(path, options):
    return load_graph(path, options['input_format'])


def cmd_extensions(args, options) -> int:
    graph = _load(args.file, options)
    solver = solver_factory.from_options(options)
    found = extensions(graph, options['semantics'], solver)
    sys.stdout.write(_render(ExtensionsResult(options['semantics'], found),
                             options))
    return EXIT_OK


def cmd_defense_graph(args, options) -> int:
    dg = build_defense_graph(_load(args.file, options))
    if options['output_format'] == 'json':
        sys.stdout.write(to_json(dg) + '\n')
    else:
        sys.stdout.write(to_dot(dg))
    return EXIT_OK


def cmd_defense_extensions(args, options) -> int:
    dg = build_defense_graph(_load(args.file, options))
    solver = solver_factory.from_options(options)
    found = defense_extensions(dg, options['semantics'], solver)
    sys.stdout.write(_render(
        DefenseExtensionsResult(options['semantics'], found), options))
    return EXIT_OK


def cmd_reasons(args, options) -> int:
    graph = _load(args.file, options)
    solver = solver_factory.from_options(options)
    bag = reasons(graph, args.arg, args.kind, options['semantics'], solver)
    sys.stdout.write(_render(
        ReasonsResult(args.arg, args.kind, options['semantics'], bag),
        options))
    return EXIT_OK


def _verdict(first, second, kind, args, options, restrict=None) -> int:
    solver = solver_factory.from_options(options)
    verdict = equivalence_workflow(first, second, kind, solver, options,
                                   restrict)
    sys.stdout.write(_render(verdict, options))
    return EXIT_OK if verdict.result else EXIT_NEGATIVE


def cmd_equiv(args, options) -> int:
    first = _load(args.first, options)
    second = _load(args.second, options)
    restrict = None
    if args.restrict is not None:
        restrict = [a.strip() for a in args.restrict.split(',') if a.strip()]
    return _verdict(first, second, args.kind, args, options, restrict)


def cmd_summarize_check(args, options) -> int:
    summary = _load(args.summary, options)
    full = _load(args.full, options)
    return _verdict(summary, full, EquivalenceKind.SUMMARIZATION, args,
                    options)


def cmd_check(args, options) -> int:
    graph = _load(args.file, options)
    solver = solver_factory.from_options(options)
    report = check_workflow(graph, solver, options)
    sys.stdout.write(_render(report, options))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_generate(args, options) -> int:
    generator = random_dags if args.dag else random_graphs
    graph, = generator(1, max_arguments=args.max_size,
                       p=options['edge_probability'], seed=options['seed'])
    logger.info("Generated %d arguments and %d attacks", len(graph.nodes),
                len(graph.attacks))
    writer = write_apx if options['output_format'] == 'apx' else write_tgf
    sys.stdout.write(writer(graph))
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Builds the argument parser with one sub-command per operation."""
    verbosity = argparse.ArgumentParser(add_help=False)
    logs = verbosity.add_argument_group('logging options')
    logs.add_argument('--log-level', dest='log_level',
                      choices=LOG_LEVELS, default='WARNING',
                      help='logging threshold')
    logs.add_argument('-v', '--verbose', action='store_true',
                      help='log at DEBUG level')

    common = argparse.ArgumentParser(add_help=False, parents=[verbosity])
    general = common.add_argument_group('general options')
    general.add_argument('--solver', choices=sorted(SOLVERS),
                         default='labelling',
                         help='engine computing extensions')
    general.add_argument('--input-format', dest='input_format',
                         choices=sorted(GRAPH_FORMATS),
                         help='input format; detected from the file suffix '
                              'by default')
    general.add_argument('--max-arguments', dest='max_arguments', type=int,
                         default=DEFAULT_MAX_ARGUMENTS,
                         help='largest graph the brute-force engine accepts')
    general.add_argument('--max-defenses', dest='max_defenses', type=int,
                         default=DEFAULT_MAX_DEFENSES,
                         help='largest number of defenses the brute-force '
                              'engine accepts')

    semantics = argparse.ArgumentParser(add_help=False)
    semantics.add_argument('-s', '--semantics',
                           choices=[s.value for s in Semantics],
                           default=Semantics.COMPLETE.value,
                           help='argumentation semantics')

    def output(parser, choices, default):
        parser.add_argument('--format', dest='output_format',
                            choices=choices, default=default,
                            help='output format')

    parser = argparse.ArgumentParser(
        prog='defarg',
        description='Defense graphs, extensions of defenses, reasons and '
                    'equivalence of argument graphs.',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True,
                                     metavar='COMMAND')

    sub = commands.add_parser('extensions', parents=[common, semantics],
                              help='print the extensions of a graph')
    sub.add_argument('file', help="graph file, or '-' for standard input")
    output(sub, ['text', 'json'], 'text')
    sub.set_defaults(handler=cmd_extensions)

    sub = commands.add_parser('defense-graph', parents=[common],
                              help='print the defense graph of a graph')
    sub.add_argument('file', help="graph file, or '-' for standard input")
    output(sub, ['dot', 'json'], 'dot')
    sub.set_defaults(handler=cmd_defense_graph)

    sub = commands.add_parser('defense-extensions',
                              parents=[common, semantics],
                              help='print the extensions of defenses')
    sub.add_argument('file', help="graph file, or '-' for standard input")
    output(sub, ['text', 'json'], 'text')
    sub.set_defaults(handler=cmd_defense_extensions)

    sub = commands.add_parser('reasons', parents=[common, semantics],
                              help='print the reasons for an argument')
    sub.add_argument('file', help="graph file, or '-' for standard input")
    sub.add_argument('--arg', required=True, metavar='NAME',
                     help='the argument to explain')
    sub.add_argument('--kind', choices=[k.value for k in ReasonKind],
                     default=ReasonKind.ROOT.value, help='reason kind')
    output(sub, ['text', 'json'], 'text')
    sub.set_defaults(handler=cmd_reasons)

    sub = commands.add_parser('equiv', parents=[common, semantics],
                              help='decide an equivalence between two graphs')
    sub.add_argument('first', help='first graph file')
    sub.add_argument('second', help='second graph file')
    sub.add_argument('--kind', required=True,
                     choices=[k.value for k in EquivalenceKind
                              if k is not EquivalenceKind.SUMMARIZATION],
                     help='equivalence kind')
    sub.add_argument('--restrict', metavar='A,B,...',
                     help='arguments compared by root equivalence; all '
                          'shared arguments by default')
    output(sub, ['text', 'json'], 'text')
    sub.set_defaults(handler=cmd_equiv)

    sub = commands.add_parser('summarize-check',
                              parents=[common, semantics],
                              help='decide whether one graph summarizes '
                                   'another')
    sub.add_argument('summary', help='candidate summary graph file')
    sub.add_argument('full', help='full graph file')
    output(sub, ['text', 'json'], 'text')
    sub.set_defaults(handler=cmd_summarize_check)

    sub = commands.add_parser('check', parents=[common, semantics],
                              help='run the property checks on a graph')
    sub.add_argument('file', help="graph file, or '-' for standard input")
    output(sub, ['text', 'json'], 'text')
    sub.set_defaults(handler=cmd_check)

    sub = commands.add_parser('generate', parents=[verbosity],
                              help='print a seeded random graph')
    sub.add_argument('--max-size', dest='max_size', type=_positive_int,
                     default=7, help='largest number of arguments')
    sub.add_argument('--seed', type=int, default=1,
                     help='random generator seed')
    sub.add_argument('--edge-probability', dest='edge_probability',
                     type=float, choices=EDGE_PROBABILITIES, default=0.3,
                     help='probability of each attack')
    sub.add_argument('--dag', action='store_true',
                     help='only draw attacks from earlier to later arguments')
    output(sub, ['tgf', 'apx'], 'tgf')
    sub.set_defaults(handler=cmd_generate)
    return parser


def setup_logging(level='WARNING'):
    """
    Sends the records of the ``defarg`` loggers to the current standard
    error at `level`, replacing the handler of any earlier call.
    """
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter('[%(levelname)s] %(name)s: %(message)s'))
    for previous in list(logger.handlers):
        logger.removeHandler(previous)
    logger.addHandler(handler)
    logger.setLevel(level)


def main(argv=None) -> int:
    """
    Runs the command line and returns the exit code.

    Parameters
    ----------
    argv : list of str, optional
        The arguments without the program name. Default is ``sys.argv``.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        options = Options(**{key: getattr(args, key) for key in Options()
                             if hasattr(args, key)})
    except DefargError as exc:
        parser.print_usage(sys.stderr)
        print(f"defarg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(options.effective_log_level)
    logger.debug("Running %s with %r", args.command, options)
    try:
        return args.handler(args, options)
    except (DefargError, OSError) as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"defarg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
