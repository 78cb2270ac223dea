"""
Exception hierarchy. Every error also derives from the closest builtin so
callers can catch either the relmin class or the plain Python one.
"""
from typing import Any, Dict, Optional


class RelminError(Exception):
    """Base class for every error raised by relmin."""


class ExactArithmeticError(RelminError, ZeroDivisionError):
    pass


class DomainError(RelminError, ValueError):
    pass


class ShapeError(RelminError, ValueError):
    pass


class NonInvertibleError(RelminError, ArithmeticError):
    pass


class IndexRangeError(RelminError, IndexError):
    pass


class MalformedInputError(RelminError, ValueError):
    pass


class PreconditionError(RelminError, ValueError):
    def __init__(self, reason: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(reason)
        self.reason = reason
        self.details = details or {}


class NotInTildeSubgroupError(PreconditionError):
    pass


class OracleContractError(RelminError):
    def __init__(self, message: str, value: Any = None):
        super().__init__(message)
        self.value = value
