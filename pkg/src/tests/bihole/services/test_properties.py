"""
Property tests: random graphs from hypothesis, seeded samples and exhaustive small orders
"""

from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihole.helper.constants import INFINITY
from bihole.models import Graph
from bihole.services import (
    EnumerationService,
    Graph6Service,
    GraphService,
    HamiltonService,
    HeldKarpService,
    InvariantService,
    RotationService
)


@st.composite
def graphs(draw, min_order=2, max_order=8):
    """
    Labeled graph with every pair an independent coin flip
    """
    n = draw(st.integers(min_order, max_order))
    order = EnumerationService.edge_order(n)
    bits = draw(st.lists(st.booleans(), min_size=len(order), max_size=len(order)))
    return Graph.from_edges(n, [pair for pair, bit in zip(order, bits) if bit])


def _labeled(lo, hi):
    for n in range(lo, hi + 1):
        yield from EnumerationService.enumerate_labeled(n)


def _cone_identities(graph):
    cone = HamiltonService.cone(graph)
    assert HamiltonService.is_traceable(graph)[0] == \
        (HamiltonService.find_hamilton_cycle(cone) is not None)
    assert InvariantService.kappa(cone) == InvariantService.kappa(graph) + 1
    assert InvariantService.alpha_tilde(cone) == InvariantService.alpha_tilde(graph)
    if not graph.is_complete():
        assert InvariantService.sigma2(cone) >= InvariantService.sigma2(graph) + 2


def _solvers_agree(graph, pairs=True):
    assert (HamiltonService.find_hamilton_cycle(graph) is not None) == \
        HeldKarpService.is_hamiltonian(graph)
    if pairs and graph.n >= 2:
        found = HeldKarpService.path_pairs(graph)
        for first in range(graph.n):
            for last in range(first + 1, graph.n):
                path = HamiltonService.find_hamilton_path(graph, first, last)
                assert (path is not None) == ((first, last) in found)


def _find_hole_matches_profile(graph):
    profile = InvariantService.coverage_profile(graph)
    assert all(x >= y for x, y in zip(profile.values, profile.values[1:]))
    n = graph.n
    for s in range(n + 2):
        for t in range(n + 2 - s):
            expected = s + t <= n and (s == 0 or t <= profile.values[s])
            assert (InvariantService.find_hole(graph, s, t) is not None) == expected


@given(graphs(min_order=0, max_order=12))
@settings(max_examples=60, deadline=None)
def test_graph6_round_trip(graph):
    """
    Decoding an encoded graph gives it back
    """
    assert Graph6Service.from_graph6(Graph6Service.to_graph6(graph)) == graph


@given(graphs(min_order=0, max_order=6), graphs(min_order=0, max_order=6))
@settings(max_examples=40, deadline=None)
def test_join_counts(first, second):
    """
    Orders and edge counts add under join, plus one edge per cross pair
    """
    joined = GraphService.join(first, second)
    assert joined.n == first.n + second.n
    assert joined.size() == first.size() + second.size() + first.n * second.n


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_hole_witnesses_validate(graph):
    """
    Every witness of the certificate passes a direct edge scan and the blocking pair has no hole
    """
    certificate = InvariantService.hole_number(graph)
    assert certificate.validate(graph)
    assert not InvariantService.has_hole_exhaustive(graph, *certificate.blocking_pair)
    assert certificate.value == InvariantService.hole_number_dual(graph)


@given(graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_adding_an_edge_never_raises_alpha_tilde(graph, data):
    """
    alpha_tilde(G + uv) <= alpha_tilde(G)
    """
    missing = graph.non_edges()
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert InvariantService.alpha_tilde(graph.with_edge(u, v)) <= InvariantService.alpha_tilde(graph)


@given(graphs(max_order=6))
@settings(max_examples=40, deadline=None)
def test_cone_identities_random(graph):
    """
    Cone: traceable iff the cone is hamiltonian, kappa grows by one, alpha_tilde is unchanged
    """
    _cone_identities(graph)


@given(graphs(min_order=3, max_order=9))
@settings(max_examples=60, deadline=None)
def test_solvers_agree_random(graph):
    """
    Backtracking and subset DP agree
    """
    _solvers_agree(graph)


@given(graphs(min_order=4, max_order=9))
@settings(max_examples=60, deadline=None)
def test_rotation_close_never_fabricates_edges(graph):
    """
    Every closure of a Hamilton path uses only edges of the graph
    """
    path = HamiltonService.find_any_hamilton_path(graph)
    if path is None:
        return
    for situation, i, j, k in islice(RotationService.applicable_rotations(path), 20):
        cycle = RotationService.rotation_close(path, situation, i, j, k)
        assert all(graph.has_edge(u, v) for u, v in cycle.consecutive_pairs())
        assert sorted(cycle.vertices) == list(range(graph.n))


@pytest.mark.parametrize("order", [2, 3, 4, 5])
def test_exhaustive_small_orders(order):
    """
    Definition equivalence, hole search, cone identities and solver agreement on every
    labeled graph of the order
    """
    for graph in EnumerationService.enumerate_labeled(order):
        assert InvariantService.hole_number_dual(graph) == InvariantService.alpha_tilde(graph)
        _find_hole_matches_profile(graph)
        _cone_identities(graph)
        if order >= 3:
            _solvers_agree(graph)


def test_sigma2_infinity_compares_above_everything():
    """
    Complete graphs satisfy every sigma2 bound
    """
    assert InvariantService.sigma2(GraphService.complete(6)) == INFINITY
    assert INFINITY >= 2 * InvariantService.alpha_tilde(GraphService.complete(6)) + 1


def test_random_definition_equivalence_sample():
    """
    hole_number equals hole_number_dual on 500 seeded random graphs up to order 12
    """
    for graph in GraphService.gnp_sample(500, 2, 12, 2024):
        assert InvariantService.hole_number_dual(graph) == InvariantService.alpha_tilde(graph)


@pytest.mark.slow
@pytest.mark.parametrize("order", [6, 7])
def test_exhaustive_definition_equivalence_and_cone(order):
    """
    Definition equivalence, hole search and cone identities on every labeled graph of order 6 and 7
    """
    for graph in EnumerationService.enumerate_labeled(order):
        assert InvariantService.hole_number_dual(graph) == InvariantService.alpha_tilde(graph)
        _find_hole_matches_profile(graph)
        _cone_identities(graph)


@pytest.mark.slow
def test_exhaustive_solver_agreement_order_six():
    """
    Backtracking and subset DP agree on every labeled graph of order 6, pairs included
    """
    for graph in EnumerationService.enumerate_labeled(6):
        _solvers_agree(graph)


@pytest.mark.slow
def test_random_solver_agreement_sample():
    """
    Hamiltonicity agrees on 300 seeded random graphs up to order 14
    """
    for graph in GraphService.gnp_sample(300, 3, 14, 7):
        _solvers_agree(graph, pairs=False)


@pytest.mark.slow
def test_monotonicity_sample():
    """
    alpha_tilde(G + e) <= alpha_tilde(G) on 1000 seeded (graph, non-edge) samples up to order 12
    """
    checked = 0
    for graph in GraphService.gnp_sample(2000, 2, 12, 99):
        missing = graph.non_edges()
        if not missing:
            continue
        u, v = missing[(graph.size() * 7 + graph.n) % len(missing)]
        assert InvariantService.alpha_tilde(graph.with_edge(u, v)) <= \
            InvariantService.alpha_tilde(graph)
        checked += 1
        if checked == 1000:
            break
    assert checked == 1000


@pytest.mark.slow
def test_rotation_soundness_sample():
    """
    1000 closures found by search on seeded random graphs up to order 10 all validate
    """
    checked = 0
    for graph in GraphService.gnp_sample(5000, 4, 10, 5):
        path = HamiltonService.find_any_hamilton_path(graph)
        if path is None:
            continue
        for candidate in (path, path.reversed()):
            for found in islice(RotationService.applicable_rotations(candidate), 5):
                assert RotationService.rotation_close(candidate, *found).is_valid()
                checked += 1
        if checked >= 1000:
            break
    assert checked >= 1000


@pytest.mark.parametrize("order", [3, 4, 5, 6])
def test_rotation_extension_sound_on_small_orders(order):
    """
    Every cycle returned by rotation-extension is a Hamilton cycle confirmed by the subset DP,
    over every labeled graph of the order
    """
    for graph in EnumerationService.enumerate_labeled(order):
        result = RotationService.rotation_extension_construct(graph)
        if result:
            assert result.is_valid()
            assert HeldKarpService.is_hamiltonian(graph)
