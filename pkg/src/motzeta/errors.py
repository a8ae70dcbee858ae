"""Exception hierarchy shared by all modules."""


class MotzetaError(Exception):
    pass


class BaseMismatch(MotzetaError):
    pass


class MissingSymbol(MotzetaError):
    pass


class EmptyCone(MotzetaError):
    pass


class InvalidDegree(MotzetaError):
    pass


class NotSummable(MotzetaError):
    pass


class MissingDiscrepancy(MotzetaError):
    pass


class MissingOrders(MotzetaError):
    pass


class InvalidIdentification(MotzetaError):
    pass


class InvalidForm(MotzetaError):
    pass


class ConsistencyFailure(MotzetaError):
    pass


class ValidationError(MotzetaError):
    pass


class InputError(MotzetaError):
    """Malformed input file or schema violation."""
