"""Plot symbols, dash patterns and the dot emitter."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .fixed import UNITY, half, parse_dimen, tdiv
from .geom import Box, Canvas, PlacedItem, TextBlock, TextMetrics, orient_shifts

TWENTYFOUR_IN = parse_dimen("24in")
POINT_FIVE = UNITY // 2


@dataclass(frozen=True)
class Symbol(Box):
    """A plot or shade symbol.

    ``shape`` is ``disk`` (radius), ``rect`` (w x h), ``glyph`` (text) or
    ``empty``.  Extents are those of the symbol's box; ``xshift``/``yshift``
    locate the anchor inside it.
    """

    shape: str = "disk"
    size: tuple = (POINT_FIVE,)
    text: str = ""
    width: int = UNITY
    height: int = POINT_FIVE
    depth: int = POINT_FIVE
    xshift: int = POINT_FIVE
    yshift: int = 0
    em: int = 10 * UNITY

    @classmethod
    def disk(cls, radius: int = POINT_FIVE) -> "Symbol":
        return cls("disk", (radius,), "", 2 * radius, radius, radius, radius, 0)

    @classmethod
    def rect(cls, w: int, h: int) -> "Symbol":
        return cls("rect", (w, h), "", w, h, 0, half(w), half(h))

    @classmethod
    def glyph(cls, text: str, metrics: TextMetrics = TextMetrics()) -> "Symbol":
        if not text:
            return cls.empty()
        w, h, d = metrics.line(text)
        return cls("glyph", (), text, w, h, d, half(w), half(h) - half(d), metrics.em)

    @classmethod
    def empty(cls) -> "Symbol":
        return cls("empty", (), "", 0, 0, 0, 0, 0)

    def anchored(self, markers: str = "", offset=(0, 0), diag=None) -> "Symbol":
        xs, ys = orient_shifts(self.width, self.height, self.depth, markers, offset, diag)
        return Symbol(self.shape, self.size, self.text, self.width, self.height,
                      self.depth, xs, ys, self.em)

    def emit(self, canvas, x, y, markers="", kind="symbol"):
        if self.shape == "box":
            self.size[0].emit(canvas, x, y)
        elif self.shape != "empty":
            canvas.items.append(PlacedItem(kind, x, y, self.width, self.height,
                                           self.depth, self))


DEFAULT_SYMBOL = Symbol.disk()


def symbol_from_box(box: Box) -> Symbol:
    """Wrap an arbitrary box (text, picture) as a plot symbol."""
    if isinstance(box, Symbol):
        return box
    if isinstance(box, TextBlock) and len(box.lines) == 1:
        return Symbol("glyph", (), box.lines[0], box.width, box.height, box.depth,
                      half(box.width), half(box.height) - half(box.depth), box.em)
    if not box.width and not box.height and not box.depth and not getattr(box, "items", ()):
        return Symbol.empty()
    return Symbol("box", (box,), "", box.width, box.height, box.depth,
                  half(box.width), half(box.height) - half(box.depth))


@dataclass(frozen=True)
class DashPattern:
    entries: tuple  # alternating down, up lengths as given
    leader: int
    flist: tuple  # (is_rule, length) in forward order
    ud: tuple  # cyclic down/up list

    @property
    def blist(self) -> tuple:
        return tuple(reversed(self.flist))

    @property
    def segments(self) -> list[tuple[int, int]]:
        e = list(self.entries) + ([0] if len(self.entries) % 2 else [])
        return [(e[i], e[i + 1]) for i in range(0, len(e), 2)]


SOLID = DashPattern((TWENTYFOUR_IN, 0), TWENTYFOUR_IN, ((True, TWENTYFOUR_IN),), (TWENTYFOUR_IN, 0))
INVISIBLE = DashPattern((0, TWENTYFOUR_IN), TWENTYFOUR_IN, ((False, TWENTYFOUR_IN),), (0, TWENTYFOUR_IN))


def set_dash_pattern(entries) -> DashPattern:
    entries = tuple(int(e) for e in entries)
    if any(e < 0 for e in entries):
        raise ValueError("dash pattern entries must be non-negative")
    total = sum(entries)
    if total <= 0:
        return INVISIBLE
    flist = tuple((i % 2 == 0, e) for i, e in enumerate(entries))
    return DashPattern(entries, total, flist, entries)


def set_dots(gap: int = 5 * UNITY, spacing: int = 26214) -> DashPattern:
    return set_dash_pattern([spacing, max(0, gap - spacing)])


def set_dashes(length: int = 5 * UNITY) -> DashPattern:
    return set_dash_pattern([length, length])


def set_dashes_near(d: int, span: int) -> DashPattern:
    n = tdiv(span + half(d), d)
    if n % 2 == 0:
        n += 1
    return set_dashes(tdiv(span, n))


def set_dots_near(d: int, span: int, spacing: int = 26214) -> DashPattern:
    b = span - parse_dimen(".05pt")
    n = tdiv(b + half(d), d)
    if n < 1:
        n = 1
    return set_dots(tdiv(b, n), spacing)


@dataclass
class PenState:
    symbol: Symbol = DEFAULT_SYMBOL
    spacing: int = 26214  # .4pt
    pattern: DashPattern = SOLID
    dashed: bool = False
    inbounds: bool = False
    check: tuple = (0, 0, 0, 0)  # left, right, bottom, top
    saving: bool = False
    queue: deque = field(default_factory=deque)
    down: int = 0

    def set_pattern(self, pattern: DashPattern, dashed: bool = True) -> None:
        self.pattern = pattern
        self.dashed = dashed

    def set_solid(self) -> None:
        self.pattern, self.dashed = SOLID, False

    def reset_phase(self) -> None:
        self.queue = deque(self.pattern.ud)
        self.down = self.queue.popleft()
        self.queue.append(self.down)

    def _next(self) -> int:
        v = self.queue.popleft()
        self.queue.append(v)
        return v

    def advance_dashing(self, distacross: int) -> int:
        """Step the dash machine by one spacing; returns the new carry."""
        if not self.dashed:
            return distacross
        self.down -= self.spacing
        if self.down <= 0:
            distacross += self.down
            distacross += self._next()
            self.down = self._next()
        return distacross


@dataclass
class DotSink:
    """Records written to a replot file while saving is on."""

    records: list = field(default_factory=list)

    def write(self, x: int, y: int) -> None:
        self.records.append((x, y))


def emit_dot(canvas: Canvas, pen: PenState, x: int, y: int, origin: tuple[int, int],
             sink: Optional[DotSink] = None) -> bool:
    """Stamp the plot symbol at internal point (x, y), subject to the clip gate."""
    if pen.inbounds:
        l, r, b, t = pen.check
        if x < l or x > r or y < b or y > t:
            return False
    a, b_ = x - origin[0], y - origin[1]
    pen.symbol.emit(canvas, a, b_, kind="dot")
    if pen.saving and sink is not None:
        sink.write(a, b_)
    return True
