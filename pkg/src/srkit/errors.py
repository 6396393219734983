"""Exception hierarchy shared by all srkit modules."""


class SrkitError(Exception):
    pass


# finite fields
class NotPrime(SrkitError, ValueError):
    pass


class ReducibleModulus(SrkitError, ValueError):
    pass


class NoPrimitiveRoot(SrkitError, ValueError):
    pass


class FieldMismatch(SrkitError, ValueError):
    pass


class DivisionByZero(SrkitError, ZeroDivisionError):
    pass


class ElementSyntaxError(SrkitError, ValueError):
    pass


class ExponentOutOfRange(SrkitError, ValueError):
    pass


# matrices
class IndexOutOfRange(SrkitError, IndexError):
    pass


class SizeMismatch(SrkitError, ValueError):
    pass


class NotSquare(SrkitError, ValueError):
    pass


class Singular(SrkitError, ValueError):
    pass


class ZeroScalar(SrkitError, ValueError):
    pass


# search / budgets
class TimeBudgetExceeded(SrkitError):
    def __init__(self, msg, deepest_level=None, nodes_visited=None):
        super().__init__(msg)
        self.deepest_level = deepest_level
        self.nodes_visited = nodes_visited


class CapExceeded(SrkitError):
    def __init__(self, msg, failures=()):
        super().__init__(msg)
        self.failures = list(failures)


class BudgetExceeded(SrkitError):
    pass


# combinatorics / codes
class MembershipViolation(SrkitError, ValueError):
    pass


class TooSmall(SrkitError, ValueError):
    pass


class NotSuperregular(SrkitError, ValueError):
    pass


class FormatError(SrkitError, ValueError):
    pass
