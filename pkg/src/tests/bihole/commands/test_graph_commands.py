"""
Tests for the single graph commands
"""

import json

import pytest
from click.testing import CliRunner

from bihole.commands import cli


@pytest.fixture
def runner():
    """
    Click test runner
    """
    return CliRunner()


def test_invariants_text(runner):
    """
    Test invariants
    """
    result = runner.invoke(cli, ['invariants', 'Dhc', '--format', 'text'])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        'n: 5', 'e: 5', 'delta: 2', 'sigma2: 4', 'kappa: 2', 'alpha_tilde: 3'
    ]


def test_invariants_json(runner):
    """
    Test invariants
    JSON reports carry the version fields, the seed and the config echo
    """
    result = runner.invoke(cli, ['invariants', 'D~{', '--seed', '5'])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body['sigma2'] == 'infinity'
    assert body['alpha_tilde'] == 1
    assert body['blocking_pair'] == [1, 1]
    assert body['schema_version'] == 1
    assert body['tool_version'] == '1.0.0'
    assert body['seed'] == 5
    assert body['config']['command'] == 'invariants'
    assert 'workers' not in body['config']


def test_invariants_petersen_stdin(runner):
    """
    Test invariants
    '-' reads the graph from stdin
    """
    result = runner.invoke(cli, ['invariants', '-'], input='IheA@GUAo\n')
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert (body['n'], body['e'], body['kappa'], body['alpha_tilde']) == (10, 15, 3, 5)


def test_invariants_order_one(runner):
    """
    Test invariants
    alpha_tilde is missing with a reason below order two
    """
    result = runner.invoke(cli, ['invariants', '@'])
    body = json.loads(result.output)
    assert body['alpha_tilde'] is None
    assert 'n >= 2' in body['alpha_tilde_reason']


@pytest.mark.parametrize("graph6", ['D?', 'D?{?', '~~??????'])
def test_invariants_malformed(runner, graph6):
    """
    Test invariants
    Test case with a malformed or too large graph
    """
    result = runner.invoke(cli, ['invariants', graph6])
    assert result.exit_code == 2
    assert 'error: ' in result.output


def test_holes(runner):
    """
    Test holes
    """
    result = runner.invoke(cli, ['holes', 'Dhc', '--s', '1', '--t', '2', '--format', 'text'])
    assert result.output.splitlines() == ['S: 0', 'T: 2 3']
    result = runner.invoke(cli, ['holes', 'Dhc', '--s', '2', '--t', '2', '--format', 'text'])
    assert result.output.strip() == 'none'
    body = json.loads(runner.invoke(cli, ['holes', 'Dhc']).output)
    assert body['value'] == 3
    assert body['blocking_pair'] == [2, 2]


def test_holes_needs_both_sizes(runner):
    """
    Test holes
    """
    result = runner.invoke(cli, ['holes', 'Dhc', '--s', '1'])
    assert result.exit_code == 2


@pytest.mark.parametrize("args, expected", [
    (['Dhc'], '0 1 2 3 4'),
    (['Dhc', '--mode', 'path', '--u', '0', '--v', '2'], 'none'),
    (['Dhc', '--mode', 'path', '--u', '0', '--v', '1'], '0 4 3 2 1'),
    (['Dhc', '--mode', 'connected'], 'hamiltonian-connected: false (0 2)'),
    (['C~', '--mode', 'connected'], 'hamiltonian-connected: true'),
    (['D?{', '--mode', 'traceable'], 'none'),
    (['IheA@GUAo'], 'none'),
])
def test_hamilton_text(runner, args, expected):
    """
    Test hamilton
    """
    result = runner.invoke(cli, ['hamilton', *args, '--format', 'text'])
    assert result.exit_code == 0
    assert result.output.strip() == expected


@pytest.mark.parametrize("args", [
    ['Dhc', '--mode', 'path', '--u', '0', '--v', '9'],
    ['Dhc', '--mode', 'path', '--u', '0'],
    ['Dhc', '--mode', 'path', '--u', '3', '--v', '3'],
    ['@', '--mode', 'connected'],
])
def test_hamilton_errors(runner, args):
    """
    Test hamilton
    Test case with bad vertices or orders
    """
    assert runner.invoke(cli, ['hamilton', *args]).exit_code == 2


def test_hamilton_json(runner):
    """
    Test hamilton
    """
    body = json.loads(runner.invoke(cli, ['hamilton', 'Dhc', '--mode', 'connected']).output)
    assert body['exists'] is False
    assert body['failing_pair'] == [0, 2]
    assert body['mode'] == 'connected'


def test_generate(runner):
    """
    Test generate
    Text is the default format, one graph6 line per graph
    """
    assert runner.invoke(cli, ['generate', 'cycle', '--n', '5']).output.strip() == 'Dhc'
    assert runner.invoke(cli, ['generate', 'complete', '--n', '5']).output.strip() == 'D~{'
    result = runner.invoke(cli, ['generate', 'sharpness1', '--a', '1', '--b', '7'])
    assert result.exit_code == 0
    assert result.output.strip()[0] == 'G'


def test_generate_gnp(runner):
    """
    Test generate
    gnp is reproducible from its seed and records the generator in JSON
    """
    args = ['generate', 'gnp', '--n', '9', '--p', '0.5', '--seed', '3', '--count', '3']
    first = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert len(first.output.splitlines()) == 3
    assert runner.invoke(cli, args).output == first.output
    body = json.loads(runner.invoke(cli, args + ['--format', 'json']).output)
    assert body['prng'] == 'numpy.random.Generator(PCG64)/v1'
    assert body['graphs'] == first.output.splitlines()


@pytest.mark.parametrize("args", [
    ['generate', 'gnp', '--n', '5', '--p', '0.5'],
    ['generate', 'sharpness1', '--a', '1', '--b', '6'],
    ['generate', 'cycle'],
    ['generate', 'cycle', '--n', '5', '--workers', '0'],
])
def test_generate_errors(runner, args):
    """
    Test generate
    Test case with missing or violated parameters
    """
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert 'error: ' in result.output


def test_output_file(runner, tmp_path):
    """
    Test --output
    """
    target = tmp_path / 'report.json'
    result = runner.invoke(cli, ['invariants', 'Dhc', '--output', str(target)])
    assert result.exit_code == 0
    assert result.output == ''
    assert json.loads(target.read_text())['alpha_tilde'] == 3


def test_version(runner):
    """
    Test --version
    """
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert '1.0.0' in result.output
