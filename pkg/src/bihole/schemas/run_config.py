"""
Run configuration schema
"""

from marshmallow import Schema, ValidationError, fields, validate, validates_schema

from bihole.helper.enums import OutputFormat, TheoremId
from bihole.helper.errors import InvalidParameter
from bihole.services.verification import VerificationService


class RunConfigSchema(Schema):
    """
    Validated options of one command run

    :param command - str
    :param format - json | text
    :param seed - int >= 0
    :param workers - int >= 1
    :param theorems - list of theorem ids
    :param enumerate - 'LO..HI' | verify only, exclusive with corpus
    :param corpus - path or '-' | verify only
    :param survey - bool
    :param timing - bool
    """

    command = fields.Str(required=True)
    format = fields.Str(
        load_default=OutputFormat.Json.value,
        validate=validate.OneOf([item.value for item in OutputFormat])
    )
    seed = fields.Int(load_default=0, validate=validate.Range(min=0))
    workers = fields.Int(load_default=1, validate=validate.Range(min=1))
    theorems = fields.List(
        fields.Str(validate=validate.OneOf([item.value for item in TheoremId])),
        load_default=None
    )
    enumerate = fields.Str(load_default=None, allow_none=True)
    corpus = fields.Str(load_default=None, allow_none=True)
    survey = fields.Bool(load_default=False)
    timing = fields.Bool(load_default=False)

    @validates_schema
    def validate_source(self, data, **kwargs):
        """
        verify reads exactly one of an enumeration range and a corpus; LO <= HI

        :param data:
        :param kwargs:
        :return:
        """
        errors = []
        if data.get('command') == 'verify':
            sources = [data.get('enumerate'), data.get('corpus')]
            if sum(source is not None for source in sources) != 1:
                errors.append('verify needs exactly one of --enumerate and --corpus')
        if data.get('enumerate') is not None:
            try:
                VerificationService.parse_range(data['enumerate'])
            except InvalidParameter as error:
                errors.append(str(error))
        if errors:
            raise ValidationError({'_schema': errors})

    @staticmethod
    def echo(config):
        """
        Config as embedded in reports; the worker count is left out so reports
        are identical at any parallelism
        """
        return {key: value for key, value in sorted(config.items()) if key != 'workers'}
