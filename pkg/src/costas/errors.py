"""Exception hierarchy.

Every error raised on bad input derives from :class:`CostasError`, which is a
``ValueError`` so callers that only care about "bad argument" can catch that.
"""


class CostasError(ValueError):
    pass


class NotPrime(CostasError):
    pass


class NotPrimitive(CostasError):
    pass


class ZeroArgument(CostasError):
    pass


class FieldMismatch(CostasError):
    pass


class BadShift(CostasError):
    pass


class W3NotApplicable(CostasError):
    pass


class ConditionUnmet(CostasError):
    pass


class FieldTooSmall(CostasError):
    pass


class OrderTooSmall(CostasError):
    pass


class OrderTooLarge(CostasError):
    pass


class InconsistentPrefix(CostasError):
    pass


class OrderMismatch(CostasError):
    pass


class IdenticalInputs(CostasError):
    pass


class GcdViolation(CostasError):
    pass


class OddOrder(CostasError):
    pass


class EvenOrder(CostasError):
    pass


class NotCostas(CostasError):
    pass


class TooFewMarks(CostasError):
    pass


class TooFewDots(CostasError):
    pass


class TooLarge(CostasError):
    pass


class SizeMismatch(CostasError):
    pass
