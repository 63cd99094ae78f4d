"""
Tests for report schemas
"""

from bihole.helper.enums import TheoremId
from bihole.schemas import (
    ConditionReportSchema,
    HoleNumberCertificateSchema,
    HoleQuerySchema,
    InvariantsSchema,
    SharpnessAuditSchema,
    VerificationReportSchema
)
from bihole.services import (
    GraphService,
    InvariantService,
    SharpnessService,
    TheoremService,
    VerificationService
)


def test_invariants_infinity():
    """
    Test InvariantsSchema
    sigma2 of a complete graph is written as 'infinity'
    """
    graph = GraphService.complete(4)
    body = InvariantsSchema().dump({
        'graph6': 'C~', 'n': 4, 'e': 6, 'delta': 3,
        'sigma2': InvariantService.sigma2(graph), 'kappa': 3, 'alpha_tilde': 1,
        'blocking_pair': [1, 1], 'alpha_tilde_reason': None
    })
    assert body['sigma2'] == 'infinity'
    assert body['blocking_pair'] == [1, 1]


def test_certificate_dump():
    """
    Test HoleNumberCertificateSchema
    """
    certificate = InvariantService.hole_number(GraphService.cycle(5))
    body = HoleNumberCertificateSchema().dump(certificate)
    assert body['value'] == 3
    assert body['blocking_pair'] == [2, 2]
    assert body['profile'] == [5, 2, 1, 0, 0, 0]
    assert body['full_row'][1] == {'s': 1, 't': 2, 'S': [0], 'T': [2, 3]}


def test_hole_query_dump():
    """
    Test HoleQuerySchema
    """
    body = HoleQuerySchema().dump({'s': 2, 't': 2, 'exists': False, 'witness': None})
    assert body == {'s': 2, 't': 2, 'exists': False, 'witness': None}


def test_condition_report_dump():
    """
    Test ConditionReportSchema
    """
    report = TheoremService.condition_report(
        GraphService.complete(3), [TheoremId.Dirac], 'n3:m7'
    )
    body = ConditionReportSchema().dump(report)
    assert body['sigma2'] == 'infinity'
    assert body['outcomes'] == {'dirac': {'hypothesis': True, 'conclusion': True}}


def test_verification_report_dump():
    """
    Test VerificationReportSchema
    """
    report = VerificationService.verify_lines(['Dhc\n', 'D?\n'], [TheoremId.OreHole], corpus='x.g6')
    body = VerificationReportSchema(exclude=('wall_clock_seconds',)).dump(report)
    assert body['corpus'] == 'x.g6'
    assert body['theorems'] == ['ore-hole']
    assert body['graphs_scanned'] == 1
    assert body['malformed_lines'] == 1
    assert body['parse_errors'][0]['line'] == 2
    assert body['all_consistent'] is True
    assert body['tallies']['ore-hole']['in_range'] == 1
    assert 'wall_clock_seconds' not in body


def test_sharpness_audit_dump():
    """
    Test SharpnessAuditSchema
    """
    body = SharpnessAuditSchema().dump(SharpnessService.audit(1, 1))
    assert body['params'] == {'a': 1, 'b': 7}
    assert body['sigma2'] == 7
    assert body['mismatches'] == []
    assert body['hamiltonian_connected'] is None
    assert [claim['name'] for claim in body['claims']][:3] == \
        ['sigma2 closed form', 'sigma2 lower bound', 'alpha_tilde']
