"""Exception types shared across the package."""


class LucresError(Exception):
    """Base class for all package-specific errors."""


class HypothesisViolation(LucresError):
    """A congruence's hypothesis fails for this particular prime."""


class UnsatisfiableHypothesis(LucresError):
    """A congruence's hypothesis fails for every prime (bad parameter, not bad p)."""


class NotInvertible(LucresError):
    """Modular inverse requested for a non-unit."""


class InternalDivisibilityFailure(LucresError):
    """A quantity that is provably divisible failed to divide; signals a bug."""


class UnsupportedModulus(LucresError):
    """The requested residue modulus has no implementation for this operation."""


class ZeroA(LucresError):
    """The operation is undefined at a = 0."""


class InexactDivision(LucresError):
    """An exact integer division left a remainder; signals a bug."""
