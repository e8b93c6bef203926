"""Exception types shared across the library.

Every failure mode that callers are expected to handle gets its own class;
generic programming errors stay as plain AssertionError / ValueError.
"""


class AlgebraError(Exception):
    """Base class for all library-specific errors."""


# -- finite fields ------------------------------------------------------------

class NonPrimeCharacteristic(AlgebraError):
    pass


class ReducibleDefiningPolynomial(AlgebraError):
    """Raised when a tower level is reducible; carries the failing level index."""

    def __init__(self, level: int, message: str = ""):
        self.level = level
        super().__init__(message or f"defining polynomial at tower level {level} is reducible")


class FieldMismatch(AlgebraError):
    pass


class DivisionByZero(AlgebraError):
    pass


class ZeroArgument(AlgebraError):
    pass


# -- polynomial ring / places --------------------------------------------------

class NotIrreducible(AlgebraError):
    pass


# -- characteristic polynomials -------------------------------------------------

class DegreeTooSmall(AlgebraError):
    pass


class BadConstantTerm(AlgebraError):
    pass


class RankMismatch(AlgebraError):
    pass


class DegreeBoundViolated(AlgebraError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"coefficient {index} violates its degree bound")


class NotIntegralAtInfinity(AlgebraError):
    pass


# -- local factorization ---------------------------------------------------------

class BlocksNotCoprime(AlgebraError):
    pass


class PrecisionInsufficient(AlgebraError):
    pass


class InseparableInput(AlgebraError):
    pass


# -- Weil layer -------------------------------------------------------------------

class NotIrreducibleOverK(AlgebraError):
    pass


class CharThree(AlgebraError):
    pass


class NotAWeilPolynomial(AlgebraError):
    pass


# -- invariants ----------------------------------------------------------------------

class EmptySupport(AlgebraError):
    pass


class ZeroModule(AlgebraError):
    pass
