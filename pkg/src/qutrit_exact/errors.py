"""Errors shared by the circuit and simulation layers."""

from __future__ import annotations

__all__ = ["DimMismatchError", "ParseError", "UnexpandableError", "UnknownMacroError"]


class DimMismatchError(ValueError):
    """Raised when two objects that must share a dimension do not."""

    def __init__(self, message: str = ""):
        text = "DIM_MISMATCH" if not message else f"DIM_MISMATCH: {message}"
        super().__init__(text)


class ParseError(ValueError):
    """Circuit-text syntax error with line and column positions (1-based)."""

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnexpandableError(ValueError):
    """Raised when a gate has no expansion over the base gate set."""

    def __init__(self, message: str = ""):
        text = "UNEXPANDABLE" if not message else f"UNEXPANDABLE: {message}"
        super().__init__(text)


class UnknownMacroError(ValueError):
    """Raised when a controlled gate names no registered macro."""

    def __init__(self, message: str = ""):
        text = "UNKNOWN_MACRO" if not message else f"UNKNOWN_MACRO: {message}"
        super().__init__(text)
