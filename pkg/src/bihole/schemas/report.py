"""
Verification and audit report schemas
"""

from marshmallow import Schema, fields

from bihole.schemas.fields import Sigma2


def _outcome(outcome):
    return {'hypothesis': outcome.hypothesis, 'conclusion': outcome.conclusion}


class TheoremTallySchema(Schema):
    """
    Per-theorem sweep counters
    """

    theorem = fields.Function(lambda tally: tally.theorem.value)
    in_range = fields.Int()
    out_of_range = fields.Int()
    hypothesis_true = fields.Int()
    conclusion_true = fields.Int()
    conclusion_evaluated = fields.Int()
    counterexamples = fields.Int()


class ConditionReportSchema(Schema):
    """
    Invariants of one graph and the theorem outcomes on it
    """

    graph_id = fields.Str()
    graph6 = fields.Str()
    n = fields.Int()
    delta = fields.Int(allow_none=True)
    sigma2 = Sigma2()
    kappa = fields.Int(allow_none=True)
    alpha_tilde = fields.Int(allow_none=True)
    outcomes = fields.Function(
        lambda report: {theorem.value: _outcome(outcome)
                        for theorem, outcome in report.outcomes.items()}
    )


class VerificationReportSchema(Schema):
    """
    Sweep report.
    wall_clock_seconds varies between runs; commands exclude it unless timing is requested.
    """

    corpus = fields.Str()
    theorems = fields.Function(lambda report: [theorem.value for theorem in report.theorems])
    seed = fields.Int()
    survey = fields.Bool()
    graphs_scanned = fields.Int()
    tallies = fields.Function(
        lambda report: {theorem.value: TheoremTallySchema().dump(tally)
                        for theorem, tally in report.tallies.items()}
    )
    counterexamples = fields.List(fields.Nested(ConditionReportSchema))
    all_consistent = fields.Bool()
    malformed_lines = fields.Int()
    parse_errors = fields.Function(
        lambda report: [{'line': line, 'message': message} for line, message in report.parse_errors]
    )
    self_test_failures = fields.Int()
    wall_clock_seconds = fields.Float(allow_none=True)


class SharpnessClaimSchema(Schema):
    """
    One checked claim
    """

    name = fields.Str()
    expected = fields.Str()
    computed = fields.Str()
    holds = fields.Bool()
    asserted = fields.Bool()


class SharpnessAuditSchema(Schema):
    """
    Sharpness audit
    """

    family = fields.Int()
    params = fields.Dict(keys=fields.Str(), values=fields.Int())
    graph6 = fields.Str()
    n = fields.Int()
    sigma2 = Sigma2()
    alpha_tilde = fields.Int()
    kappa = fields.Int()
    hamiltonian = fields.Bool()
    hamiltonian_connected = fields.Bool(allow_none=True)
    claims = fields.List(fields.Nested(SharpnessClaimSchema))
    mismatches = fields.Function(lambda audit: [claim.name for claim in audit.mismatches])
