from django.core.exceptions import ValidationError


class FapkError(Exception):
    """Base class for every error raised by the solver packages."""


class InstanceFormatError(FapkError, ValueError):

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = 'line %d: %s' % (line_number, message)
        super(InstanceFormatError, self).__init__(message)


class InstanceValidationError(FapkError, ValidationError):
    """
    Instance invariant violation.
    `record` holds the offending link, constraint or domain record.
    """

    def __init__(self, message, record=None):
        self.record = record
        if record is not None:
            message = '%s: %r' % (message, record)
        super(InstanceValidationError, self).__init__(message)

    def __str__(self):
        return self.message


class GeneratorParamsError(FapkError, ValueError):
    pass


class OracleLimitError(FapkError, ValueError):
    pass


class PropagationError(FapkError, RuntimeError):
    pass
