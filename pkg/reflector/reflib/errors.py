from __future__ import annotations

from typing import Any, Optional


class ReflectorError(ValueError):
    """Base error; `witness` names the offending elements/sets when there is one."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class UnknownElement(ReflectorError):
    pass


class AntisymmetryViolation(ReflectorError):
    pass


class CapExceeded(ReflectorError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: carrier size {size} exceeds cap {cap}", {'size': size, 'cap': cap})
        self.size = size
        self.cap = cap


class AssociativityViolation(ReflectorError):
    pass


class CompatibilityViolation(ReflectorError):
    pass


class NucleusInvalid(ReflectorError):
    pass


class HypothesisFailed(ReflectorError):
    pass


class NotMarkedQuantale(ReflectorError):
    pass


class PreconditionFailed(ReflectorError):
    pass


class ParseError(ReflectorError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}", {'line': line})
        self.line = line
        self.reason = reason


class ValidationError(ReflectorError):
    pass
