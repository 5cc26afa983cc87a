# utils/errors.py


class ExactRotError(ValueError):
    """Base class for every domain error raised by the toolkit."""


class DivisionByZero(ExactRotError, ZeroDivisionError):
    pass


class AmbientMismatch(ExactRotError):
    def __init__(self, left, right):
        super().__init__(f"scalars live in different fields: d={left} vs d={right}")
        self.left = left
        self.right = right


class ZeroQuaternion(ExactRotError):
    pass


class NotARotation(ExactRotError):
    pass


class IdentityHasNoAxis(ExactRotError):
    pass


class ClosureExceedsCap(ExactRotError):
    def __init__(self, count_so_far, cap):
        super().__init__(f"closure exceeded cap {cap} ({count_so_far} elements found so far)")
        self.count_so_far = count_so_far
        self.cap = cap


class GroupTooLarge(ExactRotError):
    def __init__(self, order, guard):
        super().__init__(f"group of order {order} exceeds the size guard {guard}")
        self.order = order
        self.guard = guard


class NotASubgroup(ExactRotError):
    pass


class UnrecognizedGroup(ExactRotError):
    """Raised when a finite rotation group matches none of the known families.

    This should be unreachable for genuine rotation groups; seeing it means a bug.
    """


class DepthTooLarge(ExactRotError):
    pass


class ParseError(ExactRotError):
    pass
