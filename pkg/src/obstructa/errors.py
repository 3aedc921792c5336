"""Exception types shared across the package."""


class ObstructaError(Exception):
    pass


class CapExceeded(ObstructaError):
    """A size or index cap was exceeded; never a silent wrong answer."""


class BudgetExceeded(ObstructaError):
    """A time or node budget ran out before the computation finished."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class OrbitCapExceeded(CapExceeded):
    pass


class NonexistentTarget(ObstructaError):
    pass


class RelationDomainError(ObstructaError):
    pass


class UnknownFamily(ObstructaError):
    pass


class MalformedCertificate(ObstructaError):
    pass


class SchemaError(ObstructaError):
    pass


class Undefined(ObstructaError):
    pass


class OracleDomainError(ObstructaError):
    pass
