"""Exception hierarchy.

Three families map onto CLI exit codes: :class:`ParseError` (2),
:class:`DomainError` (3) and :class:`CheckFailed` (1).
"""

from __future__ import annotations


class PetitError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PetitError, ValueError):
    """Malformed textual input. Carries a 1-based line/column when known."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            self.line, self.column = line, col
            message = f"{message} (line {line}, column {col})"
        else:
            self.line = self.column = None
        super().__init__(message)


class DomainError(PetitError, ValueError):
    """A mathematical precondition does not hold."""


class CheckFailed(PetitError, AssertionError):
    """A computed structural property contradicts what must hold."""


# chain rings
class NotPrime(DomainError):
    pass


class NonMonicModulus(DomainError):
    pass


class NotBasicIrreducible(DomainError):
    pass


class NotAUnit(DomainError, ZeroDivisionError):
    pass


class RingMismatch(DomainError):
    pass


class ValidationFailed(DomainError):
    pass


class TooLarge(DomainError):
    pass


# skew polynomials
class ContextMismatch(DomainError):
    pass


class IndexOutOfRange(DomainError, IndexError):
    pass


class LeadingCoeffNotUnit(DomainError):
    pass


class SigmaNotInvertible(DomainError):
    pass


class NotAField(DomainError):
    pass


class NotRegular(DomainError):
    pass


class BothZero(DomainError):
    pass


class DeltaNotZero(DomainError):
    pass


# algebras, matrices, codes
class AlgebraMismatch(DomainError):
    pass


class InconsistentWithTwoSidedTest(CheckFailed):
    pass


class NotMonic(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class NotSquare(ShapeMismatch):
    pass


class SigmaOrderMismatch(DomainError):
    pass


class NotARightDivisor(DomainError):
    pass


class MissingCofactor(DomainError):
    pass


class EmptyCode(DomainError):
    pass


# generalized Galois rings
class GammaNotFixed(DomainError):
    pass


class NotAGaloisRing(DomainError):
    pass


class NotGGR(DomainError):
    pass


class DNotInvertible(DomainError):
    pass


class DInS0(DomainError):
    pass


class NotCommutativeBase(DomainError):
    pass
