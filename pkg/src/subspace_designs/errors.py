"""Exception types raised across the package."""


class DesignError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeCharacteristic(DesignError, ValueError):
    pass


class ReducibleModulus(DesignError, ValueError):
    pass


class DivisionByZero(DesignError, ZeroDivisionError):
    pass


class FieldMismatch(DesignError, ValueError):
    pass


class ZeroElement(DesignError, ValueError):
    pass


class AmbientMismatch(DesignError, ValueError):
    pass


class ZeroRankSubspace(DesignError, ValueError):
    pass


class ShapeMismatch(DesignError, ValueError):
    pass


class UnequalIndexSums(DesignError, ValueError):
    pass


class IdenticalTuples(DesignError, ValueError):
    pass


class RankOutOfRange(DesignError, ValueError):
    pass


class NonPolynomialScheme(DesignError, ValueError):
    pass


class ZeroPolynomial(DesignError, ValueError):
    pass


class InvalidScheme(DesignError, ValueError):
    pass


class LengthMismatch(DesignError, ValueError):
    pass


class MonotonicityViolation(DesignError, ValueError):
    pass


class ParameterOutOfRange(DesignError, ValueError):
    pass


class HypothesisViolated(DesignError, ValueError):
    """Too many members for the inductive blocker construction."""


class BudgetExceeded(DesignError, RuntimeError):
    """An exhaustive scan would visit more candidates than allowed."""


class BaseCaseBudgetExceeded(BudgetExceeded):
    pass


class ZeroDeterminant(DesignError, ArithmeticError):
    pass
