"""
Exceptions shared by the graph, linear algebra and analyzer modules
"""


class SeidelError(Exception):
    """Base class for every error raised by the toolkit"""


class GraphFormatError(SeidelError):
    """Malformed graph6 line or edge list"""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DisconnectedGraphError(SeidelError):
    """Distance matrices are only defined for connected graphs"""


class InvalidParameterError(SeidelError):
    """Family or operation parameters outside their validity range"""


class InvariantViolation(SeidelError):
    """An internal consistency check failed"""
