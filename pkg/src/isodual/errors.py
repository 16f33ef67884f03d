"""Exception types raised across the package."""

from __future__ import annotations


class IsodualError(Exception):
    """Base class for every error raised by :mod:`isodual`."""


# finite fields
class NonPrimeCharacteristic(IsodualError, ValueError):
    pass


class SizeBoundExceeded(IsodualError, ValueError):
    pass


class NotCoprime(IsodualError, ValueError):
    pass


class PinUnsatisfiable(IsodualError, ValueError):
    pass


# polynomials
class FieldMismatch(IsodualError, ValueError):
    pass


class DivisionByZero(IsodualError, ZeroDivisionError):
    pass


class CoefficientNotInBaseField(IsodualError, ValueError):
    pass


class NotMonic(IsodualError, ValueError):
    pass


class ZeroConstantTerm(IsodualError, ValueError):
    pass


# Z_n and q-permutations
class NotInvariant(IsodualError, ValueError):
    """A residue set is not closed under multiplication by q."""


class InvalidPermutation(IsodualError, ValueError):
    pass


class NotUnit(InvalidPermutation):
    pass


class NotQTranslation(InvalidPermutation):
    pass


class Mismatch(IsodualError, ValueError):
    pass


# splittings and codes
class NoSplitting(IsodualError):
    pass


class NotIsoSelfDual(IsodualError):
    pass


class DimensionMismatch(IsodualError, ValueError):
    pass


class LengthMismatch(IsodualError, ValueError):
    pass


class TooLarge(IsodualError, ValueError):
    pass


class BadResidue(IsodualError, ValueError):
    pass


class DegreeTooHigh(IsodualError, ValueError):
    pass
