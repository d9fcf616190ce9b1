# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import argparse
import random
import sys
import time

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from importlib import metadata

import inators
import picire

from inators import log as logging

from . import hdd, hoist, info, prune, report
from .cotree import cotree_to_graph
from .formats import parse_edgelist, parse_graph6
from .parser import parse_cotree
from .recognize import graph_to_cotree, P4Witness, random_cotree
from .synthesis import eigenbasis, NotACographError, scale_to_numeric, synthesize, twin_sequence
from .verify import certify, numeric_eigenvalues, Verdict

logger = logging.getLogger('cospectra')
__version__ = metadata.version(__package__)

EXIT_PASS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_NOT_A_COGRAPH = 2
EXIT_INPUT_ERROR = 3


args_phase_choices = {
    'prune': {'transformations': [prune.prune]},
    'hoist': {'transformations': [hoist.hoist]},
    'prune+hoist': {'transformations': [prune.prune, hoist.hoist]},
}


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that reports usage errors with the input error exit code.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f'{self.prog}: error: {message}\n')


@dataclass
class FuzzFailure:
    trial: int
    cotree: str
    failed: list
    reduced: str = None


@dataclass
class FuzzSummary:
    trials: int
    failures: list = field(default_factory=list)

    @property
    def passes(self):
        return self.trials - len(self.failures)


def log_tree(title, tree):
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug('%s\n\theight: %s\n\tshape: %s\n\tnodes: %s\n',
                     title,
                     info.height(tree),
                     ', '.join(str(cnt) for cnt in info.shape(tree)),
                     ', '.join(f'{cnt} {ty}' for ty, cnt in sorted(info.count(tree).items())))
    logger.trace('%r', tree)


def load_graph(*, g6=None, edges=None, cotree=None):
    """
    Load the graph given by exactly one of the sources.

    :param g6: graph6 string.
    :param edges: Path to an edge-list file.
    :param cotree: Cotree DSL string.
    :return: Pair of the graph and an input descriptor.
    """
    if g6 is not None:
        return parse_graph6(g6), f'g6:{g6}'
    if edges is not None:
        with open(edges, 'r') as f:
            return parse_edgelist(f.read()), f'edges:{edges}'
    if cotree is not None:
        return cotree_to_graph(parse_cotree(cotree)), f'cotree:{cotree}'
    raise ValueError('No graph source given.')


def recognize_graph(graph):
    """
    Execute the recognition part of cospectra as if invoked from command line,
    however, control its behaviour not via command line arguments but function
    parameters.

    :param graph: The graph to recognize.
    :return: The normalized cotree, or a P4Witness if graph is not a cograph.
    """
    result = graph_to_cotree(graph)
    if isinstance(result, P4Witness):
        logger.debug('Induced P4: %s', result)
    else:
        log_tree('Recognized cotree', result)
    return result


def _synthesize_report(graph, *, lam, source):
    start = time.perf_counter()

    cotree = recognize_graph(graph)
    if isinstance(cotree, P4Witness):
        raise NotACographError(cotree)

    seq = twin_sequence(graph)
    m, predicted, cases = synthesize(seq)
    logger.trace('Matrix (lambda-units):\n%r', m)

    verdicts, spectrum = certify(m, graph, predicted, lam=lam, basis=eigenbasis(seq))
    replayed = seq.replay()
    verdicts.insert(0, Verdict('replay', replayed == graph,
                               '' if replayed == graph else f'replayed edges differ: {sorted(set(replayed.edges) ^ set(graph.edges))}'))

    return report.RunReport(input=source,
                            cotree=str(cotree),
                            sequence=seq,
                            cases=[case.number for case in cases],
                            lam=lam,
                            matrix=m,
                            numeric=scale_to_numeric(m, lam).tolist(),
                            spectrum=spectrum,
                            predicted=predicted,
                            verdicts=verdicts,
                            wall_time=time.perf_counter() - start)


def synthesize_graph(graph, *, lam=1.0, source=''):
    """
    Execute the synthesis part of cospectra as if invoked from command line,
    however, control its behaviour not via command line arguments but function
    parameters.

    :param graph: The cograph to synthesize a matrix for.
    :param lam: The nonzero lambda the spectrum is scaled with.
    :param source: Input descriptor recorded in the report.
    :return: The RunReport with the verdicts of all checks.
    :raises NotACographError: If graph contains an induced P4.
    """
    picire.cli.log_args('Synthesis session starts', {'n': graph.n, 'lam': lam, 'source': source})
    if lam == 0:
        raise ValueError('lambda must be nonzero.')
    return _synthesize_report(graph, lam=lam, source=source)


def check_report(run, graph):
    """
    Re-run every check of a loaded report against a graph.

    :param run: A RunReport (usually loaded from file).
    :param graph: The graph the report should certify.
    :return: List of Verdicts.
    """
    replayed = run.sequence.replay()
    verdicts = [Verdict('replay', replayed == graph, '' if replayed == graph else 'twin sequence does not rebuild the graph')]
    if run.matrix.n != graph.n:
        verdicts.append(Verdict('pattern', False, f'matrix of dimension {run.matrix.n} for a graph on {graph.n} vertices'))
        return verdicts
    checks, _ = certify(run.matrix, graph, run.predicted, lam=run.lam)
    verdicts.extend(checks)
    return verdicts


class StillFailing:
    """
    Predicate holding for cotrees that fail exactly the same checks as the
    original failing cotree.
    """

    def __init__(self, failed, *, lam):
        self.failed = list(failed)
        self.lam = lam

    def __call__(self, tree):
        return failed_checks(tree, lam=self.lam) == self.failed


def failed_checks(tree, *, lam):
    """
    Run the whole pipeline on a cotree and collect the names of the failing
    checks (recognition round trip included).
    """
    graph = cotree_to_graph(tree)
    recognized = graph_to_cotree(graph)
    if isinstance(recognized, P4Witness):
        return ['recognize']
    if recognized != tree:
        return ['roundtrip']
    run = _synthesize_report(graph, lam=lam, source=f'cotree:{tree}')
    return [v.name for v in run.verdicts if not v.passed]


def fuzz_trial(trial, *, n_max, seed, lam):
    rnd = random.Random(f'{seed}:{trial}')
    tree = random_cotree(rnd.randint(1, n_max), rnd.getrandbits(64))
    failed = failed_checks(tree, lam=lam)
    logger.debug('Trial #%d: %s %s', trial, tree, 'FAIL ' + ','.join(failed) if failed else 'pass')
    return trial, str(tree), failed


def reduce_cotree(tree, predicate, *,
                  reduce_class=picire.DD, reduce_config=None, cache_class=None,
                  phases=('prune',), hdd_star=True):
    """
    Execute the tree reduction part of cospectra as if invoked from command
    line, however, control its behaviour not via command line arguments but
    function parameters.

    :param tree: Cotree to reduce, predicate(tree) must hold.
    :param predicate: Callable deciding whether a cotree is still
        interesting.
    :param reduce_class: Reference to the reducer class.
    :param reduce_config: Dictionary containing information to initialize the
        reduce_class.
    :param cache_class: Reference to the cache class to use.
    :param phases: Sequence of phase names (keys of args_phase_choices).
    :param hdd_star: Boolean to enable the HDD star algorithm.
    :return: The reduced, relabelled and normalized cotree.
    """
    # Get the parameters in a dictionary so that they can be pretty-printed
    args = locals().copy()
    del args['tree']
    picire.cli.log_args('Reduce session starts', args)

    log_tree('Initial tree', tree)

    for phase_cnt, phase in enumerate(phases):
        logger.info('Phase #%d', phase_cnt)
        tree = hdd.hddmin(tree,
                          reduce_class=reduce_class, reduce_config=reduce_config or {},
                          tester_class=hdd.CotreeTester, tester_config={'predicate': predicate},
                          id_prefix=(f'p{phase_cnt}',),
                          cache=cache_class() if cache_class else None,
                          hdd_star=hdd_star,
                          **args_phase_choices[phase])
        log_tree(f'Tree after reduction phase #{phase_cnt}', tree)

    return prune.finalize(tree)


def fuzz(*, n_max, trials, seed, jobs=1, lam=1.0, reduce=False, phases=('prune',)):
    """
    Execute the fuzz harness of cospectra as if invoked from command line,
    however, control its behaviour not via command line arguments but function
    parameters. Every trial draws its own cotree from (seed, trial), so the
    outcome does not depend on jobs.

    :param n_max: Largest number of leaves of the random cotrees.
    :param trials: Number of trials.
    :param seed: Seed of the whole run.
    :param jobs: Number of worker processes.
    :param lam: The lambda of the numeric cross-check.
    :param reduce: Boolean to enable reducing failing cotrees.
    :param phases: Reduction phases (see reduce_cotree).
    :return: The FuzzSummary.
    """
    args = locals().copy()
    picire.cli.log_args('Fuzz session starts', args)

    if n_max < 1 or trials < 1:
        raise ValueError(f'Fuzzing needs n_max >= 1 and trials >= 1, got {n_max} and {trials}.')
    if lam == 0:
        raise ValueError('lambda must be nonzero.')

    run = partial(fuzz_trial, n_max=n_max, seed=seed, lam=lam)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, range(trials), chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [run(trial) for trial in range(trials)]

    summary = FuzzSummary(trials=trials)
    for trial, dsl, failed in results:
        if not failed:
            continue
        logger.warning('Trial #%d failed (%s): %s', trial, ', '.join(failed), dsl)
        reduced = None
        if reduce:
            reduced = str(reduce_cotree(parse_cotree(dsl), StillFailing(failed, lam=lam), phases=phases))
        summary.failures.append(FuzzFailure(trial=trial, cotree=dsl, failed=failed, reduced=reduced))
    return summary


def _write(text, out):
    if out:
        with open(out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_recognize(args):
    result = recognize_graph(args.graph)
    if isinstance(result, P4Witness):
        print(f'not a cograph: induced P4 {result}')
        return EXIT_NOT_A_COGRAPH
    print(result)
    return EXIT_PASS


def cmd_synth(args):
    run = synthesize_graph(args.graph, lam=args.lam, source=args.source)
    _write(report.dumps(run), args.out)
    for verdict in run.verdicts:
        logger.info('%s', verdict)
    return EXIT_PASS if run.passed else EXIT_VERIFICATION_FAILURE


def cmd_check(args):
    with open(args.report, 'r') as f:
        run = report.loads(f.read())
    graph = args.graph if args.graph is not None else cotree_to_graph(parse_cotree(run.cotree))

    verdicts = check_report(run, graph)
    for verdict in verdicts:
        print(verdict)
    return EXIT_PASS if all(v.passed for v in verdicts) else EXIT_VERIFICATION_FAILURE


def cmd_eig(args):
    cotree = recognize_graph(args.graph)
    if isinstance(cotree, P4Witness):
        raise NotACographError(cotree)
    m, _, _ = synthesize(twin_sequence(args.graph))
    for x in numeric_eigenvalues(scale_to_numeric(m, args.lam)):
        print(f'{x:.17g}')
    return EXIT_PASS


def cmd_fuzz(args):
    summary = fuzz(n_max=args.n_max, trials=args.trials, seed=args.seed, jobs=args.jobs, lam=args.lam,
                   reduce=args.reduce, phases=args.phase or ['prune'])
    for failure in summary.failures:
        print(f'FAIL trial #{failure.trial} ({", ".join(failure.failed)}): {failure.cotree}')
        if failure.reduced is not None:
            print(f'  reduced: {failure.reduced}')
    print(f'{summary.passes} passed, {len(summary.failures)} failed '
          f'({summary.trials} trials, n <= {args.n_max}, seed {args.seed})')
    return EXIT_PASS if not summary.failures else EXIT_VERIFICATION_FAILURE


def process_args(args):
    inators.arg.process_log_level_argument(args, logger)
    inators.arg.process_sys_recursion_limit_argument(args)

    if args.lam == 0:
        raise ValueError('--lambda must be nonzero')

    if args.command == 'fuzz':
        if args.n_max < 1:
            raise ValueError('--n-max must be at least 1')
        if args.trials < 1:
            raise ValueError('--trials must be at least 1')
        if args.jobs < 1:
            raise ValueError('--jobs must be at least 1')
        return

    args.graph, args.source = None, None
    if args.g6 is not None or args.edges is not None or args.cotree is not None:
        args.graph, args.source = load_graph(g6=args.g6, edges=args.edges, cotree=args.cotree)


def create_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--lambda', dest='lam', metavar='REAL', type=float, default=1.0,
                        help='nonzero scale of the spectrum (default: %(default)s)')
    inators.arg.add_log_level_argument(common)
    inators.arg.add_sys_recursion_limit_argument(common)

    def graph_source(required):
        source = ArgumentParser(add_help=False)
        group = source.add_mutually_exclusive_group(required=required)
        group.add_argument('--g6', metavar='STR',
                           help='graph in graph6 format (at most 62 vertices)')
        group.add_argument('--edges', metavar='FILE',
                           help='file listing one edge "u v" per line (vertices numbered from 1)')
        group.add_argument('--cotree', metavar='STR',
                           help='cotree in DSL form, e.g., J(1,U(2,3))')
        return source

    arg_parser = ArgumentParser(description='CLI for certifying that cographs admit matrices with at most four distinct eigenvalues')
    inators.arg.add_version_argument(arg_parser, version=__version__)
    subparsers = arg_parser.add_subparsers(dest='command', metavar='COMMAND', required=True)

    sub = subparsers.add_parser('recognize', parents=[common, graph_source(True)],
                                help='print the normalized cotree of a cograph or an induced P4')
    sub.set_defaults(func=cmd_recognize)

    sub = subparsers.add_parser('synth', parents=[common, graph_source(True)],
                                help='synthesize a matrix, verify it and write the report')
    sub.add_argument('-o', '--out', metavar='FILE',
                     help='file to write the report to (default: standard output)')
    sub.set_defaults(func=cmd_synth)

    sub = subparsers.add_parser('check', parents=[common, graph_source(False)],
                                help='re-verify a report (against its own cotree unless a graph is given)')
    sub.add_argument('report', metavar='REPORT',
                     help='report file written by synth')
    sub.set_defaults(func=cmd_check)

    sub = subparsers.add_parser('eig', parents=[common, graph_source(True)],
                                help='print the numeric eigenvalues of the synthesized matrix')
    sub.set_defaults(func=cmd_eig)

    sub = subparsers.add_parser('fuzz', parents=[common],
                                help='run the pipeline on seeded random cotrees')
    sub.add_argument('--n-max', metavar='N', type=int, default=12,
                     help='largest number of vertices (default: %(default)s)')
    sub.add_argument('--trials', metavar='N', type=int, default=1000,
                     help='number of random cotrees (default: %(default)s)')
    sub.add_argument('--seed', metavar='INT', type=int, default=42,
                     help='seed of the run (default: %(default)s)')
    sub.add_argument('-j', '--jobs', metavar='N', type=int, default=1,
                     help='number of worker processes (default: %(default)s)')
    sub.add_argument('--reduce', default=False, action='store_true',
                     help='reduce failing cotrees with hierarchical delta debugging')
    sub.add_argument('--phase', metavar='NAME', choices=args_phase_choices.keys(), action='append',
                     help='reduction phase to run (%(choices)s; default: prune) '
                          '(may be specified multiple times to run different phases in sequence)')
    sub.set_defaults(func=cmd_fuzz)

    return arg_parser


def execute():
    """
    The main entry point of cospectra.
    """
    logging.basicConfig(format='%(message)s')

    arg_parser = create_parser()
    args = arg_parser.parse_args()

    try:
        process_args(args)
    except (OSError, ValueError) as e:
        arg_parser.error(e)

    try:
        sys.exit(args.func(args))
    except NotACographError as e:
        print(f'not a cograph: induced P4 {e.witness}')
        sys.exit(EXIT_NOT_A_COGRAPH)
    except (OSError, report.ReportError, ValueError) as e:
        logger.error('%s', e)
        sys.exit(EXIT_INPUT_ERROR)
