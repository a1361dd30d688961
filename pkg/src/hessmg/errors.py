"""Exception hierarchy.

Every error raised by the library derives from :class:`HessmgError`, which is
itself a ``ValueError`` so that callers validating user input can catch either.
"""


class HessmgError(ValueError):
    """Base class for all library errors."""


class OutOfRange(HessmgError):
    def __init__(self, j, value, n):
        self.j = j
        self.value = value
        super().__init__(f"h({j}) = {value} is outside [{j}, {n}]")


class NotMonotone(HessmgError):
    def __init__(self, j, value, following):
        self.j = j
        super().__init__(f"h({j}) = {value} > h({j + 1}) = {following}")


class InvalidPermutation(HessmgError):
    pass


class BadIndices(HessmgError):
    pass


class BoundExceeded(HessmgError):
    def __init__(self, n, bound):
        self.n = n
        self.bound = bound
        super().__init__(f"n = {n} exceeds the enumeration bound {bound} "
                         f"(set HESSMG_MAX_N to raise it)")


class NotSquare(HessmgError):
    pass


class ShapeMismatch(HessmgError):
    pass


class IndexOutOfRange(HessmgError):
    pass


class NotABasis(HessmgError):
    pass


class ZeroVector(HessmgError):
    pass


class ZeroParameter(HessmgError):
    pass


class NotAFlag(HessmgError):
    pass


class NotAnEdge(HessmgError):
    pass


class UnboundVariable(HessmgError):
    pass


class NotAFixedPoint(HessmgError):
    pass
