"""Exception hierarchy.

Every error carries a machine-readable ``kind`` and, where one exists, an
exact ``certificate`` that the CLI serializes next to the message.
"""


class GkzError(Exception):
    kind = "GkzError"

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.message = message
        self.certificate = certificate


class NotFull(GkzError):
    kind = "NotFull"


class NotPointed(GkzError):
    kind = "NotPointed"


class SpanViolation(GkzError):
    kind = "SpanViolation"


class DimensionMismatch(GkzError):
    kind = "DimensionMismatch"


class DegenerateWeight(GkzError):
    kind = "DegenerateWeight"


class NonGenericWeight(GkzError):
    kind = "NonGenericWeight"


class FaceNotInUmbrella(GkzError):
    kind = "FaceNotInUmbrella"


class NonGlobalOrder(GkzError):
    kind = "NonGlobalOrder"


class NonPrimitiveKernel(GkzError):
    kind = "NonPrimitiveKernel"


class CorankNotOne(GkzError):
    kind = "CorankNotOne"


class ResonantParameter(GkzError):
    kind = "ResonantParameter"


class PreconditionViolation(GkzError):
    kind = "PreconditionViolation"


class EmptyOperator(GkzError):
    kind = "EmptyOperator"


class SingularConversion(GkzError):
    kind = "SingularConversion"


class ListsIntersect(GkzError):
    kind = "ListsIntersect"


class NotRegularCase(GkzError):
    kind = "NotRegularCase"


class NotConfluentCase(GkzError):
    kind = "NotConfluentCase"


class ParseError(GkzError):
    kind = "ParseError"

    def __init__(self, message, position=None):
        super().__init__(message, certificate=None)
        self.position = position
