from __future__ import annotations


class DslError(Exception):
    """Base for all identity-language failures; always carries a position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class LexError(DslError):
    pass


class ParseError(DslError):
    pass


class EvalError(DslError):
    pass
