"""
Theorem verification sweeps over enumerated orders and graph6 corpora.
"""

import multiprocessing as mp
import time
from itertools import islice

from bihole import VERIFY_LOGGER, Config
from bihole.helper.enums import TheoremId
from bihole.helper.errors import InvalidParameter
from bihole.models import VerificationReport
from bihole.services.enumeration import EnumerationService
from bihole.services.graph6 import Graph6Service
from bihole.services.theorem import TheoremService

SELF_TESTED = (TheoremId.OreHole, TheoremId.OreHoleHC)


def _sweep(items, theorems, survey):
    """
    Evaluate every theorem on every graph of one work item

    :param items: iterable of (graph_id, Graph)
    :return: VerificationReport holding partial counts
    """
    report = VerificationReport(corpus=None, theorems=theorems, seed=None, survey=survey)
    self_test = any(theorem in SELF_TESTED for theorem in theorems)
    for graph_id, graph in items:
        report.graphs_scanned += 1
        profile = TheoremService.profile(graph)
        outcomes = {}
        for theorem in theorems:
            outcome = TheoremService.evaluate(profile, theorem, survey)
            outcomes[theorem] = outcome
            report.tallies[theorem].record(outcome)
        if self_test and not TheoremService.implication_holds(profile):
            VERIFY_LOGGER.error('Implication self-test failed on %s', graph_id)
            report.self_test_failures += 1
        if not all(outcome.consistent for outcome in outcomes.values()):
            counterexample = TheoremService.condition_report(
                profile, theorems, graph_id, survey, outcomes
            )
            VERIFY_LOGGER.warning('Counterexample %s (%s)', graph_id, counterexample.graph6)
            report.counterexamples.append(counterexample)
    return report


def _sweep_masks(task):
    n, start, stop, theorems, survey = task
    masks = range(start, stop)
    items = ((f'n{n}:m{mask}', graph)
             for mask, graph in EnumerationService.enumerate_masks(n, masks))
    return _sweep(items, theorems, survey)


def _sweep_graphs(task):
    items, theorems, survey = task
    return _sweep(items, theorems, survey)


class VerificationService:
    """
    Class with corpus sweeps
    """

    @staticmethod
    def parse_range(text):
        """
        Parse 'LO..HI' or a single order

        :param text: str
        :return: (lo, hi)
        """
        low, separator, high = str(text).partition('..')
        try:
            lo = int(low)
            hi = int(high) if separator else lo
        except ValueError:
            raise InvalidParameter(f'Expected LO..HI, got {text!r}') from None
        if lo > hi:
            raise InvalidParameter(f'Empty range {text!r}: {lo} > {hi}')
        return lo, hi

    @staticmethod
    def _map(function, tasks, workers):
        if workers <= 1:
            return map(function, tasks)
        return VerificationService._pool_map(function, tasks, workers)

    @staticmethod
    def _pool_map(function, tasks, workers):
        with mp.Pool(workers) as pool:
            yield from pool.imap_unordered(function, tasks)

    @staticmethod
    def _mask_tasks(lo, hi, theorems, survey, chunk_size):
        for n in range(lo, hi + 1):
            total = len(EnumerationService.edge_masks(n))
            for start in range(0, total, chunk_size):
                yield n, start, min(start + chunk_size, total), theorems, survey

    @staticmethod
    def _graph_tasks(graphs, theorems, survey, chunk_size):
        graphs = iter(graphs)
        while True:
            chunk = list(islice(graphs, chunk_size))
            if not chunk:
                return
            yield chunk, theorems, survey

    @staticmethod
    def _collect(report, partials, started):
        for partial in partials:
            report.merge(partial)
        report.wall_clock_seconds = time.perf_counter() - started
        report.finalize()
        if report.counterexamples:
            VERIFY_LOGGER.warning('%s: %s counterexamples', report.corpus, len(report.counterexamples))
        return report

    @staticmethod
    def verify_corpus(graphs, theorems, survey=False, workers=None, seed=None,
                      corpus='stream', chunk_size=None):
        """
        Evaluate theorems on a stream of graphs.
        The report does not depend on the worker count or the order of the stream.

        :param graphs: iterable of (graph_id, Graph or decoding error)
        :param theorems: iterable of TheoremId
        :param survey: solve every conclusion, not only where the hypothesis holds
        :param workers: process count, Config.WORKERS by default
        :param seed: recorded in the report
        :param corpus: description recorded in the report
        :param chunk_size: graphs per work item, Config.CHUNK_SIZE by default
        :return: VerificationReport
        """
        theorems = sorted({TheoremId(theorem) for theorem in theorems}, key=lambda item: item.value)
        workers = workers or Config.WORKERS
        chunk_size = chunk_size or Config.CHUNK_SIZE
        seed = Config.SEED if seed is None else seed
        report = VerificationReport(corpus, theorems, seed, survey)
        started = time.perf_counter()

        def decoded():
            for graph_id, item in graphs:
                if isinstance(item, Exception):
                    report.parse_errors.append((graph_id, str(item)))
                else:
                    yield graph_id, item

        tasks = VerificationService._graph_tasks(decoded(), theorems, survey, chunk_size)
        partials = VerificationService._map(_sweep_graphs, tasks, workers)
        return VerificationService._collect(report, partials, started)

    @staticmethod
    def verify_lines(lines, theorems, corpus='-', **options):
        """
        Sweep a graph6 corpus; malformed lines are counted with their line numbers and skipped
        """
        graphs = ((number if isinstance(item, Exception) else f'line {number}', item)
                  for number, item in Graph6Service.read_corpus(lines))
        return VerificationService.verify_corpus(graphs, theorems, corpus=corpus, **options)

    @staticmethod
    def verify_enumerated(lo, hi, theorems, survey=False, workers=None, seed=None, chunk_size=None):
        """
        Sweep every labeled graph with order in lo..hi

        :return: VerificationReport
        """
        EnumerationService.edge_masks(lo)
        EnumerationService.edge_masks(hi)
        theorems = sorted({TheoremId(theorem) for theorem in theorems}, key=lambda item: item.value)
        workers = workers or Config.WORKERS
        chunk_size = chunk_size or Config.CHUNK_SIZE
        seed = Config.SEED if seed is None else seed
        report = VerificationReport(f'enumerate {lo}..{hi}', theorems, seed, survey)
        started = time.perf_counter()
        tasks = VerificationService._mask_tasks(lo, hi, theorems, survey, chunk_size)
        partials = VerificationService._map(_sweep_masks, tasks, workers)
        return VerificationService._collect(report, partials, started)
