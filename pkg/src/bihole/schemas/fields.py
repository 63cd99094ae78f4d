"""
Custom marshmallow fields
"""

from math import isinf

from marshmallow import fields

from bihole.helper.constants import INFINITY, INFINITY_TEXT


class Sigma2(fields.Field):
    """
    sigma2 value: an int, or the string 'infinity' for complete graphs
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        if isinstance(value, float) and isinf(value):
            return INFINITY_TEXT
        return int(value)

    def _deserialize(self, value, attr, data, **kwargs):
        if value == INFINITY_TEXT:
            return INFINITY
        try:
            return int(value)
        except (TypeError, ValueError) as error:
            raise self.make_error('invalid') from error

    default_error_messages = {'invalid': 'Not an integer or "infinity".'}
