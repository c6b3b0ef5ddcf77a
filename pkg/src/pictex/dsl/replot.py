"""Replot files: the dot coordinates of saved curves, one ``x,y.`` record each.

Coordinates are integer sp relative to the plot origin.  Lines starting
with ``%`` are comments and a ``/`` ends the file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Union

Record = Union[tuple, str]  # (x, y) or a comment


class ReplotError(ValueError):
    def __init__(self, message: str, offset: int, source: str = "<replot>"):
        self.message, self.offset, self.source = message, offset, source
        super().__init__(f"{source}: byte {offset}: {message}")


@dataclass
class ReplotFile:
    records: list = field(default_factory=list)

    @property
    def dots(self) -> list[tuple[int, int]]:
        return [r for r in self.records if isinstance(r, tuple)]

    @property
    def comments(self) -> list[str]:
        return [r for r in self.records if isinstance(r, str)]


def _check_sp(v: int) -> int:
    if abs(v) > 0x3FFFFFFF:
        raise OverflowError(f"{v}sp is out of range")
    return int(v)


def format_replot(records: Iterable[Record]) -> str:
    lines = []
    for r in records:
        if isinstance(r, str):
            lines.append("%" + r)
        else:
            x, y = r
            lines.append(f"{_check_sp(x)},{_check_sp(y)}.")
    lines.append("/")
    return "\n".join(lines) + "\n"


_TOKEN = re.compile(rb"\s+|%[^\n]*|([+-]?\d+),([+-]?\d+)\.|/")


def parse_replot(data: Union[bytes, str], source: str = "<replot>") -> ReplotFile:
    """Read records up to ``/``; anything after the terminator is ignored."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    out = ReplotFile()
    pos = 0
    n = len(data)
    while pos < n:
        m = _TOKEN.match(data, pos)
        if m is None:
            snippet = data[pos:pos + 12].decode("utf-8", "replace")
            raise ReplotError(f"malformed record starting {snippet!r}", pos, source)
        tok = m.group(0)
        if tok == b"/":
            return out
        if tok.startswith(b"%"):
            out.records.append(tok[1:].decode("utf-8", "replace").rstrip("\r"))
        elif m.group(1) is not None:
            try:
                out.records.append((_check_sp(int(m.group(1))), _check_sp(int(m.group(2)))))
            except OverflowError as e:
                raise ReplotError(str(e), pos, source) from None
        pos = m.end()
    raise ReplotError("missing `/' terminator", pos, source)


def load_replot(path, source=None) -> ReplotFile:
    with open(path, "rb") as f:
        return parse_replot(f.read(), source or str(path))


def save_replot(path, records: Iterable[Record]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_replot(records))
