from __future__ import annotations

from typing import Any


class MisbenchException(Exception):
    """Base class of every error raised by misbench."""


class GraphFormatError(MisbenchException, ValueError):
    position: int
    message: str

    def __init__(self, message: str, position: int = -1):
        super().__init__(message)
        self.message = message
        self.position = position

    def __repr__(self) -> str:
        return f"GraphFormatError(message={self.message!r}, position={self.position!r})"


class GuardViolation(MisbenchException):
    name: str
    limit: int
    actual: int

    def __init__(self, name: str, limit: int, actual: int):
        super().__init__(f"{name}: {actual} exceeds the limit {limit}")
        self.name = name
        self.limit = limit
        self.actual = actual

    def __repr__(self) -> str:
        return (
            f"GuardViolation(name={self.name!r}, limit={self.limit!r}, "
            f"actual={self.actual!r})"
        )


class PreconditionViolation(MisbenchException):
    message: str
    witness: Any

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message if witness is None else f"{message}: {witness!r}")
        self.message = message
        self.witness = witness

    def __repr__(self) -> str:
        return (
            f"PreconditionViolation(message={self.message!r}, "
            f"witness={self.witness!r})"
        )


class ProofClaimViolation(MisbenchException):
    check: str
    detail: str

    def __init__(self, check: str, detail: str):
        super().__init__(f"{check} failed: {detail}")
        self.check = check
        self.detail = detail

    def __repr__(self) -> str:
        return f"ProofClaimViolation(check={self.check!r}, detail={self.detail!r})"
