"""
Sweep commands: verify, audit
"""

import sys

import click

from bihole.helper.constants import EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE
from bihole.helper.decorators import command_errors
from bihole.helper.enums import TheoremId
from bihole.schemas import SharpnessAuditSchema, VerificationReportSchema
from bihole.services import SharpnessService, VerificationService
from .options import common_options, emit, load_config


def _theorem_ids(values):
    ids = []
    for value in values:
        ids.extend(part.strip() for part in value.split(',') if part.strip())
    return ids or None


def _verify_text(report):
    lines = [f'corpus: {report.corpus}', f'graphs scanned: {report.graphs_scanned}']
    for theorem, tally in report.tallies.items():
        lines.append(
            f'{theorem.value}: in range {tally.in_range}, hypothesis true {tally.hypothesis_true}, '
            f'conclusion true {tally.conclusion_true}, counterexamples {tally.counterexamples}'
        )
    lines.extend(f'counterexample: {item.graph_id} {item.graph6}' for item in report.counterexamples)
    lines.extend(f'malformed line {line}: {message}' for line, message in report.parse_errors)
    lines.append(f'self-test failures: {report.self_test_failures}')
    if report.wall_clock_seconds is not None:
        lines.append(f'wall clock: {report.wall_clock_seconds:.3f}s')
    return lines


def verify_exit_code(report):
    """
    2 when corpus lines were malformed, 1 on a counterexample or self-test failure, else 0
    """
    if report.parse_errors:
        return EXIT_USAGE
    if report.counterexamples or report.self_test_failures:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


@click.command()
@click.option('--enumerate', 'order_range', default=None,
              help='Sweep every labeled graph with order in LO..HI.')
@click.option('--corpus', type=click.File('rb'), default=None,
              help='graph6 corpus file, one graph per line; - reads stdin.')
@click.option('--theorem', 'theorems', multiple=True,
              help='Theorem ids, repeated or comma separated; all by default.')
@click.option('--survey', is_flag=True, help='Solve every conclusion for statistics.')
@click.option('--timing', is_flag=True, help='Include the wall clock in the report.')
@common_options
@command_errors
# pylint: disable=too-many-arguments
def verify(order_range, corpus, theorems, survey, timing, output_format, seed, workers, output):
    """
    Check hypothesis => conclusion for every graph of an enumeration range or corpus
    """
    # binary stdin under test runners has no name
    corpus_name = None if corpus is None else getattr(corpus, 'name', '<stdin>')
    config = load_config(
        'verify', output_format, seed, workers,
        enumerate=order_range,
        corpus=corpus_name,
        theorems=_theorem_ids(theorems),
        survey=survey,
        timing=timing
    )
    selected = [TheoremId(value) for value in config['theorems'] or [item.value for item in TheoremId]]
    options = {'survey': survey, 'workers': config['workers'], 'seed': config['seed']}
    if order_range is not None:
        lo, hi = VerificationService.parse_range(order_range)
        report = VerificationService.verify_enumerated(lo, hi, selected, **options)
    else:
        report = VerificationService.verify_lines(corpus, selected, corpus=corpus_name, **options)

    if not timing:
        report.wall_clock_seconds = None
    exclude = () if timing else ('wall_clock_seconds',)
    body = VerificationReportSchema(exclude=exclude).dump(report)
    emit(config, output, body, _verify_text(report))
    sys.exit(verify_exit_code(report))


@click.command()
@click.option('--family', type=click.IntRange(1, 2), required=True, help='Sharpness family.')
@click.option('--a', type=int, required=True, help='Family parameter a.')
@click.option('--b', type=int, default=None, help='Family 1 parameter b, 3a+4 by default.')
@common_options
@command_errors
# pylint: disable=too-many-arguments
def audit(family, a, b, output_format, seed, workers, output):
    """
    Exact invariants of a sharpness construction checked against its stated relations
    """
    config = load_config('audit', output_format, seed, workers)
    result = SharpnessService.audit(family, a, b)
    text = [f'family {result.family} {result.params}: {result.graph6}']
    for claim in result.claims:
        status = 'ok' if claim.holds else 'FAIL'
        if not claim.asserted:
            status = 'info'
        text.append(f'[{status}] {claim.name}: {claim.expected} (computed {claim.computed})')
    emit(config, output, SharpnessAuditSchema().dump(result), text)
    sys.exit(EXIT_COUNTEREXAMPLE if result.mismatches else EXIT_OK)
