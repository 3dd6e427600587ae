from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LexError

KEYWORDS = frozenset({"identity", "params", "in", "lhs", "rhs"})

# longest operators first so ".." wins over a stray "."
_TOKEN_PATTERNS = [
    ("WS", r"[ \t\r\f]+"),
    ("NEWLINE", r"\n"),
    ("COMMENT", r"\#[^\n]*"),
    ("INT", r"[0-9]+"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"'),
    ("OP", r"\.\.|[-+*/^,;{}()=]"),
]
_MASTER = re.compile("|".join(f"(?P<{name}>{pat})" for name, pat in _TOKEN_PATTERNS))
_ESCAPE = re.compile(r"\\(.)")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, IDENT, STRING, KEYWORD, OP, EOF
    value: str
    line: int
    column: int

    def __str__(self):
        if self.kind == "EOF":
            return "end of input"
        if self.kind in ("OP", "KEYWORD"):
            return repr(self.value)
        return f"{self.kind.lower()} {self.value!r}"


def tokenize(source: str) -> list[Token]:
    """Split identity-file text into tokens, each stamped with line/column.

    >>> [t.value for t in tokenize("1..b")]
    ['1', '..', 'b', '']
    """
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _MASTER.match(source, pos)
        col = pos - line_start + 1
        if m is None:
            ch = source[pos]
            if ch == '"':
                raise LexError("unterminated string literal", line, col)
            raise LexError(f"unexpected character {ch!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "NEWLINE":
            line += 1
            line_start = m.end()
        elif kind == "IDENT":
            tokens.append(Token("KEYWORD" if text in KEYWORDS else "IDENT", text, line, col))
        elif kind == "STRING":
            tokens.append(Token("STRING", _ESCAPE.sub(r"\1", text[1:-1]), line, col))
        elif kind in ("INT", "OP"):
            tokens.append(Token(kind, text, line, col))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens
