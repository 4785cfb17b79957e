"""Exception hierarchy shared by every flagforge module."""

from __future__ import annotations


class FlagforgeError(Exception):
    """Base class for all library errors."""


class NotPrime(FlagforgeError):
    pass


class NotPrimitive(FlagforgeError):
    pass


class InvalidModulus(FlagforgeError):
    pass


class TableCapExceeded(FlagforgeError):
    pass


class ZeroHasNoOrder(FlagforgeError):
    pass


class NotADivisor(FlagforgeError):
    pass


class ElementSyntaxError(FlagforgeError):
    pass


class CtxMismatch(FlagforgeError):
    pass


class AllZeroGenerators(FlagforgeError):
    pass


class ScaleByZero(FlagforgeError):
    pass


class EnumerationCapExceeded(FlagforgeError):
    pass


class NotNested(FlagforgeError):
    pass


class FullOrZeroSubspace(FlagforgeError):
    pass


class TypeMismatch(FlagforgeError):
    pass


class IndexOutOfRange(FlagforgeError):
    pass


class MixedDimensions(FlagforgeError):
    pass


class NotAFriend(FlagforgeError):
    pass


class NotAFriendDimension(FlagforgeError):
    pass


class NotDivisorChain(FlagforgeError):
    pass


class InvalidType(FlagforgeError):
    pass


class DegenerateCase(FlagforgeError):
    pass


class InconsistentResult(FlagforgeError):
    """Two independent computations of the same quantity disagreed."""


class FlagSpecError(FlagforgeError):
    """Parse or validation failure in a flag-spec document, with position."""

    def __init__(self, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column}: {reason}")
