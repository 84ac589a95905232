from __future__ import annotations


class DomainError(ValueError):
    """Input is well-formed but outside the physical or mathematical domain."""


class EmptySectorError(DomainError):
    pass


class NotAnEigenstateError(DomainError):
    pass


class ValidationError(DomainError):
    pass


class PoleError(DomainError):
    pass


class BranchUnavailableError(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
