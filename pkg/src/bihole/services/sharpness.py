"""
Audit of the constructions showing the hole conditions cannot be weakened.
"""

from bihole import LOGGER
from bihole.helper.constants import SHARPNESS2_ASSERTED_FROM
from bihole.helper.enums import TheoremId
from bihole.helper.errors import InvalidParameter
from bihole.models import SharpnessAudit, SharpnessClaim
from bihole.services.graph import GraphService
from bihole.services.graph6 import Graph6Service
from bihole.services.theorem import TheoremService


def _claim(name, expected, computed, holds, asserted=True):
    return SharpnessClaim(name, expected, str(computed), bool(holds), asserted)


class SharpnessService:
    """
    Class with sharpness audits
    """

    @staticmethod
    def _family1_claims(profile, a, b):
        sigma2 = profile.sigma2
        alpha = profile.alpha_tilde
        closed_form = b if a == 1 else a + b - 2
        return [
            _claim('sigma2 closed form', 'b' if a == 1 else 'a+b-2', sigma2, sigma2 == closed_form),
            _claim('sigma2 lower bound', f'sigma2 >= 4a+2 = {4 * a + 2}', sigma2, sigma2 >= 4 * a + 2),
            _claim('alpha_tilde', f'alpha_tilde = 2a+1 = {2 * a + 1}', alpha, alpha == 2 * a + 1),
            _claim('hole inequality', 'sigma2 >= 2*alpha_tilde',
                   f'{sigma2} vs {2 * alpha}', sigma2 >= 2 * alpha),
            _claim('kappa', 'kappa = 1', profile.kappa, profile.kappa == 1),
            _claim('not hamiltonian', 'hamiltonian = false', profile.hamiltonian,
                   not profile.hamiltonian),
            _claim('ore-hole hypothesis', 'ore-hole hypothesis = false',
                   TheoremService.check_hypothesis(profile, TheoremId.OreHole),
                   not TheoremService.check_hypothesis(profile, TheoremId.OreHole)),
        ]

    @staticmethod
    def _family2_claims(profile, a):
        sigma2 = profile.sigma2
        alpha = profile.alpha_tilde
        asserted = a >= SHARPNESS2_ASSERTED_FROM
        hypothesis = TheoremService.check_hypothesis(profile, TheoremId.OreHoleHC)
        return [
            _claim('sigma2', f'sigma2 = a+1 = {a + 1}', sigma2, sigma2 == a + 1, asserted),
            _claim('alpha_tilde upper bound', 'alpha_tilde <= 3', alpha, alpha <= 3, asserted),
            _claim('hole inequality', 'sigma2 >= 2*alpha_tilde+1',
                   f'{sigma2} vs {2 * alpha + 1}', sigma2 >= 2 * alpha + 1, asserted),
            _claim('kappa', 'kappa = 2', profile.kappa, profile.kappa == 2, asserted),
            _claim('not hamiltonian-connected', 'hamiltonian-connected = false',
                   profile.hamiltonian_connected, not profile.hamiltonian_connected, asserted),
            _claim('ore-hole-hc hypothesis', 'ore-hole-hc hypothesis = false',
                   hypothesis, not hypothesis, asserted),
        ]

    @staticmethod
    def audit(family, a, b=None):
        """
        Compute the invariants of a sharpness graph exactly and check every stated relation.
        Family 1 is K_a and K_b joined by one edge (b >= 3a+4, b defaults to 3a+4);
        family 2 is (K_{a-2} u K_1) v K_2, where claims are asserted only from a = 6 on.

        :param family: 1 or 2
        :param a: int
        :param b: int, family 1 only
        :return: SharpnessAudit
        """
        family = int(family)
        if family == 1:
            b = 3 * a + 4 if b is None else b
            graph = GraphService.sharpness1(a, b)
            params = {'a': a, 'b': b}
        elif family == 2:
            if b is not None:
                raise InvalidParameter('Family 2 takes no b')
            graph = GraphService.sharpness2(a)
            params = {'a': a}
        else:
            raise InvalidParameter(f'Unknown sharpness family {family}, expected 1 or 2')

        profile = TheoremService.profile(graph)
        if family == 1:
            claims = SharpnessService._family1_claims(profile, a, b)
            hamiltonian_connected = None
        else:
            claims = SharpnessService._family2_claims(profile, a)
            hamiltonian_connected = profile.hamiltonian_connected

        audit = SharpnessAudit(
            family=family,
            params=params,
            graph6=Graph6Service.to_graph6(graph),
            n=graph.n,
            sigma2=profile.sigma2,
            alpha_tilde=profile.alpha_tilde,
            kappa=profile.kappa,
            hamiltonian=profile.hamiltonian,
            hamiltonian_connected=hamiltonian_connected,
            claims=claims
        )
        for claim in audit.mismatches:
            LOGGER.warning('Sharpness family %s %s: %s fails (%s, computed %s)',
                           family, params, claim.name, claim.expected, claim.computed)
        return audit
