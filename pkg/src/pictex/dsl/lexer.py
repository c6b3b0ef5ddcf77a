"""Tokenizer for picture sources and point streams."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..fixed import UNITS


class ParseError(ValueError):
    """A syntax error with a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = "<input>"):
        self.message, self.line, self.col, self.source = message, line, col, source
        super().__init__(f"{source}:{line}:{col}: {message}" if line else message)


@dataclass(frozen=True)
class Token:
    kind: str  # word | number | dimen | string | punct | eof
    text: str
    line: int
    col: int
    offset: int

    def __str__(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


_UNIT = "|".join(UNITS)
_SPEC = [
    ("ws", r"[ \t\r\n]+"),
    ("comment", r"%[^\n]*"),
    ("dimen", rf"[+-]?(?:\d+\.?\d*|\.\d+)(?:{_UNIT})(?![A-Za-z])"),
    ("number", r"[+-]?(?:\d+\.?\d*|\.\d+)"),
    ("string", r'"(?:[^"\\\n]|\\.)*"'),
    ("word", r"[A-Za-z][A-Za-z0-9_]*"),
    ("punct", r"[\[\]<>(){},/*=:]"),
]
_RX = re.compile("|".join(f"(?P<{k}>{p})" for k, p in _SPEC))
_ESC = re.compile(r"\\(.)")


def tokenize(text: str, source: str = "<input>") -> list[Token]:
    out: list[Token] = []
    pos, line, line_start = 0, 1, 0
    n = len(text)
    while pos < n:
        m = _RX.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            if text[pos] == '"':
                raise ParseError("unterminated string", line, col, source)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col, source)
        kind = m.lastgroup
        raw = m.group()
        if kind == "string":
            out.append(Token("string", _ESC.sub(r"\1", raw[1:-1]), line, col, pos))
        elif kind == "dimen":
            out.append(Token("dimen", raw, line, col, pos))
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, raw, line, col, pos))
        nl = raw.count("\n")
        if nl:
            line += nl
            line_start = pos + raw.rindex("\n") + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1, pos))
    return out
