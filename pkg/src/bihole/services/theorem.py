"""
Sufficient conditions for hamiltonicity as checkable hypothesis and conclusion predicates.
"""

from functools import cached_property

from bihole import Config
from bihole.helper.enums import Conclusion, TheoremId
from bihole.helper.errors import OrderOutOfRange
from bihole.models import ConditionReport, TheoremOutcome
from bihole.services.graph6 import Graph6Service
from bihole.services.hamilton import HamiltonService
from bihole.services.invariant import InvariantService
from bihole.services.rotation import RotationService


class GraphProfile:
    """
    Lazily computed invariants and Hamilton properties of one graph.
    Cheap values are computed first and reused by every theorem.
    """

    def __init__(self, graph):
        self.graph = graph
        self._connectivity = {}

    @property
    def n(self):
        """
        Order
        """
        return self.graph.n

    @cached_property
    def delta(self):
        """
        delta(G)
        """
        return InvariantService.min_degree(self.graph)

    @cached_property
    def sigma2(self):
        """
        sigma2(G), INFINITY when complete
        """
        return InvariantService.sigma2(self.graph)

    @cached_property
    def kappa(self):
        """
        kappa(G)
        """
        return InvariantService.kappa(self.graph)

    def is_k_connected(self, k):
        """
        kappa(G) >= k, cached per threshold
        """
        if 'kappa' in self.__dict__:
            return self.kappa >= k
        if k not in self._connectivity:
            self._connectivity[k] = InvariantService.is_k_connected(self.graph, k)
        return self._connectivity[k]

    @cached_property
    def alpha_tilde(self):
        """
        Bipartite-hole-number
        """
        return InvariantService.alpha_tilde(self.graph)

    @cached_property
    def hamiltonian(self):
        """
        Has a Hamilton cycle. A graph that is not 2-connected has none; otherwise a short
        rotation-extension run goes first and the exact search decides.
        """
        if self.n < 3 or not self.is_k_connected(2):
            return False
        budget = Config.FAST_PATH_ROTATION_FACTOR * self.n
        if RotationService.rotation_extension_construct(self.graph, budget):
            return True
        return HamiltonService.find_hamilton_cycle(self.graph) is not None

    @cached_property
    def traceable(self):
        """
        Has a Hamilton path
        """
        return HamiltonService.is_traceable(self.graph)[0]

    @cached_property
    def hamiltonian_connected(self):
        """
        Every pair joined by a Hamilton path
        """
        return HamiltonService.is_hamiltonian_connected(self.graph)[0]


def _dirac(profile):
    return 2 * profile.delta >= profile.n


def _ore(profile):
    return profile.sigma2 >= profile.n


def _mcdiarmid_yolov(profile):
    return profile.delta >= profile.alpha_tilde


def _ore_hc(profile):
    return profile.sigma2 >= profile.n + 1


def _zhou_hc(profile):
    return profile.delta >= profile.alpha_tilde + 1


def _ore_hole(profile):
    return profile.is_k_connected(2) and profile.sigma2 >= 2 * profile.alpha_tilde


def _ore_hole_trace(profile):
    return profile.is_k_connected(1) and profile.sigma2 >= 2 * profile.alpha_tilde - 2


def _ore_hole_hc(profile):
    return profile.is_k_connected(3) and profile.sigma2 >= 2 * profile.alpha_tilde + 1


# theorem -> (hypothesis, conclusion, minimum order)
REGISTRY = {
    TheoremId.Dirac: (_dirac, Conclusion.Hamiltonian, 3),
    TheoremId.Ore: (_ore, Conclusion.Hamiltonian, 3),
    TheoremId.McDiarmidYolov: (_mcdiarmid_yolov, Conclusion.Hamiltonian, 3),
    TheoremId.OreHC: (_ore_hc, Conclusion.HamiltonianConnected, 3),
    TheoremId.ZhouHC: (_zhou_hc, Conclusion.HamiltonianConnected, 3),
    TheoremId.OreHole: (_ore_hole, Conclusion.Hamiltonian, 3),
    TheoremId.OreHoleTrace: (_ore_hole_trace, Conclusion.Traceable, 2),
    TheoremId.OreHoleHC: (_ore_hole_hc, Conclusion.HamiltonianConnected, 3),
}


class TheoremService:
    """
    Class with theorem predicates
    """

    @staticmethod
    def profile(graph):
        """
        Wrap a graph for repeated theorem checks
        """
        return graph if isinstance(graph, GraphProfile) else GraphProfile(graph)

    @staticmethod
    def minimum_order(theorem):
        """
        Smallest order the theorem is stated for
        """
        return REGISTRY[TheoremId(theorem)][2]

    @staticmethod
    def conclusion_of(theorem):
        """
        Conclusion the theorem asserts
        """
        return REGISTRY[TheoremId(theorem)][1]

    @staticmethod
    def _in_range(profile, theorem):
        minimum = TheoremService.minimum_order(theorem)
        if profile.n < minimum:
            raise OrderOutOfRange(
                f'{TheoremId(theorem).value} is stated for order >= {minimum}, got n = {profile.n}'
            )

    @staticmethod
    def check_hypothesis(graph, theorem):
        """
        Hypothesis of a theorem, connectivity side-conditions included

        :param graph: Graph or GraphProfile
        :param theorem: TheoremId
        :return: bool
        """
        profile = TheoremService.profile(graph)
        TheoremService._in_range(profile, theorem)
        return REGISTRY[TheoremId(theorem)][0](profile)

    @staticmethod
    def check_conclusion(graph, theorem):
        """
        Conclusion of a theorem decided exactly

        :param graph: Graph or GraphProfile
        :param theorem: TheoremId
        :return: bool
        """
        profile = TheoremService.profile(graph)
        TheoremService._in_range(profile, theorem)
        conclusion = TheoremService.conclusion_of(theorem)
        if conclusion is Conclusion.Hamiltonian:
            return profile.hamiltonian
        if conclusion is Conclusion.Traceable:
            return profile.traceable
        return profile.hamiltonian_connected

    @staticmethod
    def evaluate(graph, theorem, survey=False):
        """
        Outcome of one theorem; the conclusion is solved only when the hypothesis holds
        unless survey is set

        :return: TheoremOutcome
        """
        profile = TheoremService.profile(graph)
        try:
            hypothesis = TheoremService.check_hypothesis(profile, theorem)
        except OrderOutOfRange:
            return TheoremOutcome(None)
        conclusion = None
        if hypothesis or survey:
            conclusion = TheoremService.check_conclusion(profile, theorem)
        return TheoremOutcome(hypothesis, conclusion)

    @staticmethod
    def condition_report(graph, theorems, graph_id, survey=False, outcomes=None):
        """
        Full invariants of a graph with the outcome of every requested theorem

        :param graph: Graph or GraphProfile
        :param theorems: iterable of TheoremId
        :param graph_id: str
        :param survey: solve conclusions regardless of the hypothesis
        :param outcomes: already computed outcomes to reuse
        :return: ConditionReport
        """
        profile = TheoremService.profile(graph)
        outcomes = dict(outcomes or {})
        for theorem in theorems:
            if theorem not in outcomes:
                outcomes[theorem] = TheoremService.evaluate(profile, theorem, survey)
        n = profile.n
        return ConditionReport(
            graph_id=graph_id,
            graph6=Graph6Service.to_graph6(profile.graph),
            n=n,
            delta=profile.delta if n >= 1 else None,
            sigma2=profile.sigma2,
            kappa=profile.kappa if n >= 1 else None,
            alpha_tilde=profile.alpha_tilde if n >= 2 else None,
            outcomes=outcomes
        )

    @staticmethod
    def implication_holds(graph):
        """
        Self-test: the stronger Ore-hole HC hypothesis implies the Ore-hole hypothesis
        (3-connected implies 2-connected, 2a+1 > 2a). Vacuous below order three.
        """
        profile = TheoremService.profile(graph)
        if profile.n < 3:
            return True
        if not TheoremService.check_hypothesis(profile, TheoremId.OreHoleHC):
            return True
        return TheoremService.check_hypothesis(profile, TheoremId.OreHole)
