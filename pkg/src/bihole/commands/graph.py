"""
Single graph commands: invariants, holes, hamilton, generate
"""

import click

from bihole.helper.constants import PRNG_ALGORITHM
from bihole.helper.decorators import command_errors
from bihole.helper.enums import FamilyId, HamiltonMode, OutputFormat
from bihole.helper.errors import InvalidParameter, InvalidVertex
from bihole.schemas import (
    HamiltonReportSchema,
    HoleNumberCertificateSchema,
    HoleQuerySchema,
    InvariantsSchema
)
from bihole.services import GraphService, Graph6Service, HamiltonService, InvariantService
from .options import common_options, emit, load_config, read_graph


def _join(values):
    return ' '.join(str(value) for value in values)


@click.command()
@click.argument('graph6')
@common_options
@command_errors
def invariants(graph6, output_format, seed, workers, output):
    """
    n, e, delta, sigma2, kappa and the bipartite-hole-number of GRAPH6 ('-' reads stdin)
    """
    config = load_config('invariants', output_format, seed, workers)
    graph = read_graph(graph6)
    n = graph.n
    report = {
        'graph6': Graph6Service.to_graph6(graph),
        'n': n,
        'e': graph.size(),
        'delta': InvariantService.min_degree(graph) if n >= 1 else None,
        'sigma2': InvariantService.sigma2(graph),
        'kappa': InvariantService.kappa(graph) if n >= 1 else None,
        'alpha_tilde': None,
        'blocking_pair': None,
        'alpha_tilde_reason': None,
    }
    if n >= 2:
        certificate = InvariantService.hole_number(graph)
        report['alpha_tilde'] = certificate.value
        report['blocking_pair'] = list(certificate.blocking_pair)
    else:
        report['alpha_tilde_reason'] = f'bipartite-hole-number needs n >= 2, got n = {n}'
    body = InvariantsSchema().dump(report)
    text = [f'{key}: {"none" if body[key] is None else body[key]}'
            for key in ('n', 'e', 'delta', 'sigma2', 'kappa', 'alpha_tilde')]
    emit(config, output, body, text)


@click.command()
@click.argument('graph6')
@click.option('--s', 's_size', type=int, default=None, help='Size of the S side.')
@click.option('--t', 't_size', type=int, default=None, help='Size of the T side.')
@common_options
@command_errors
# pylint: disable=too-many-arguments
def holes(graph6, s_size, t_size, output_format, seed, workers, output):
    """
    An (s, t)-hole of GRAPH6, or the hole number certificate when no sizes are given
    """
    config = load_config('holes', output_format, seed, workers)
    graph = read_graph(graph6)
    if (s_size is None) != (t_size is None):
        raise InvalidParameter('--s and --t go together')

    if s_size is not None:
        witness = InvariantService.find_hole(graph, s_size, t_size)
        body = HoleQuerySchema().dump({
            's': s_size, 't': t_size, 'exists': witness is not None, 'witness': witness
        })
        if witness is None:
            text = ['none']
        else:
            text = [f'S: {_join(witness.s_vertices)}', f'T: {_join(witness.t_vertices)}']
        emit(config, output, body, text)
        return

    certificate = InvariantService.hole_number(graph)
    body = HoleNumberCertificateSchema().dump(certificate)
    text = [f'alpha_tilde: {certificate.value}',
            f'blocking_pair: {_join(certificate.blocking_pair)}',
            f'profile: {_join(certificate.profile.values)}']
    text.extend(f'({witness.s}, {witness.t}): S {_join(witness.s_vertices)} | '
                f'T {_join(witness.t_vertices)}' for witness in certificate.full_row)
    emit(config, output, body, text)


@click.command()
@click.argument('graph6')
@click.option('--mode', type=click.Choice([item.value for item in HamiltonMode]),
              default=HamiltonMode.Cycle.value, help='What to decide.')
@click.option('--u', 'first', type=int, default=None, help='First end vertex for path mode.')
@click.option('--v', 'last', type=int, default=None, help='Last end vertex for path mode.')
@common_options
@command_errors
# pylint: disable=too-many-arguments
def hamilton(graph6, mode, first, last, output_format, seed, workers, output):
    """
    Hamilton cycle, (u, v)-path, traceability or hamiltonian-connectedness of GRAPH6
    """
    config = load_config('hamilton', output_format, seed, workers)
    graph = read_graph(graph6)
    mode = HamiltonMode(mode)
    report = {'mode': mode.value, 'u': first, 'v': last, 'sequence': None, 'failing_pair': None}

    if mode is HamiltonMode.Connected:
        exists, failing_pair = HamiltonService.is_hamiltonian_connected(graph)
        report['failing_pair'] = list(failing_pair) if failing_pair else None
        text = ['hamiltonian-connected: true' if exists else
                f'hamiltonian-connected: false ({_join(failing_pair)})']
    else:
        if mode is HamiltonMode.Cycle:
            sequence = HamiltonService.find_hamilton_cycle(graph)
        elif mode is HamiltonMode.Path:
            if first is None or last is None:
                raise InvalidVertex('path mode needs --u and --v')
            sequence = HamiltonService.find_hamilton_path(graph, first, last)
        else:
            sequence = HamiltonService.is_traceable(graph)[1]
        exists = sequence is not None
        report['sequence'] = list(sequence.vertices) if exists else None
        text = [_join(sequence.vertices) if exists else 'none']
    report['exists'] = exists
    emit(config, output, HamiltonReportSchema().dump(report), text)


@click.command()
@click.argument('family', type=click.Choice([item.value for item in FamilyId]))
@click.option('--n', type=int, default=None, help='Order (leaves for star).')
@click.option('--a', type=int, default=None, help='First family parameter.')
@click.option('--b', type=int, default=None, help='Second family parameter.')
@click.option('--p', type=float, default=None, help='Edge probability for gnp.')
@click.option('--count', type=int, default=1, help='Number of gnp graphs.')
@common_options
@command_errors
# pylint: disable=too-many-arguments
def generate(family, n, a, b, p, count, output_format, seed, workers, output):
    """
    graph6 lines of a member of FAMILY; gnp needs an explicit --seed
    """
    family = FamilyId(family)
    if family is FamilyId.Gnp and seed is None:
        raise InvalidParameter('gnp needs an explicit --seed')
    if count < 1:
        raise InvalidParameter(f'--count must be >= 1, got {count}')
    config = load_config('generate', output_format, seed, workers, default_format=OutputFormat.Text)

    if family is FamilyId.Gnp:
        graphs = [GraphService.generate(family, n=n, p=p, seed=seed + index)
                  for index in range(count)]
    else:
        graphs = [GraphService.generate(family, n=n, a=a, b=b)]
    lines = [Graph6Service.to_graph6(graph) for graph in graphs]
    body = {'family': family.value, 'graphs': lines,
            'params': {key: value for key, value in (('n', n), ('a', a), ('b', b), ('p', p))
                       if value is not None}}
    if family is FamilyId.Gnp:
        body['prng'] = PRNG_ALGORITHM
    emit(config, output, body, lines)
