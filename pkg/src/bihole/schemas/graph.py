"""
Single graph report schemas
"""

from marshmallow import Schema, fields

from bihole.schemas.fields import Sigma2


class InvariantsSchema(Schema):
    """
    Invariants report

    :param n, e, delta, kappa - int
    :param sigma2 - int or 'infinity'
    :param alpha_tilde - int or None when n < 2
    :param blocking_pair - [s, t] or None
    :param alpha_tilde_reason - str or None | why alpha_tilde is missing
    """

    graph6 = fields.Str()
    n = fields.Int()
    e = fields.Int()
    delta = fields.Int(allow_none=True)
    sigma2 = Sigma2()
    kappa = fields.Int(allow_none=True)
    alpha_tilde = fields.Int(allow_none=True)
    blocking_pair = fields.List(fields.Int(), allow_none=True)
    alpha_tilde_reason = fields.Str(allow_none=True)


class HoleWitnessSchema(Schema):
    """
    Hole witness: both sides as ascending vertex lists
    """

    s = fields.Int()
    t = fields.Int()
    s_vertices = fields.List(fields.Int(), data_key='S')
    t_vertices = fields.List(fields.Int(), data_key='T')


class HoleNumberCertificateSchema(Schema):
    """
    Bipartite-hole-number certificate with its coverage profile
    """

    value = fields.Int()
    blocking_pair = fields.List(fields.Int())
    full_row = fields.List(fields.Nested(HoleWitnessSchema))
    profile = fields.Function(lambda certificate: list(certificate.profile.values))


class HoleQuerySchema(Schema):
    """
    Answer to a single (s, t) hole query; witness is None when no hole exists
    """

    s = fields.Int()
    t = fields.Int()
    exists = fields.Bool()
    witness = fields.Nested(HoleWitnessSchema, allow_none=True)


class HamiltonReportSchema(Schema):
    """
    hamilton report

    :param mode - cycle | path | connected | traceable
    :param exists - bool
    :param sequence - list of vertices or None
    :param failing_pair - [u, v] or None | connected mode only
    """

    mode = fields.Str()
    exists = fields.Bool()
    sequence = fields.List(fields.Int(), allow_none=True)
    u = fields.Int(allow_none=True)
    v = fields.Int(allow_none=True)
    failing_pair = fields.List(fields.Int(), allow_none=True)
