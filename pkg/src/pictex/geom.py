"""Coordinates, rotation, placement, bounding-box accounting and text boxes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional, Sequence

from .fixed import MAX_DIMEN, UNITY, Dimen, fmul, half, parse_decimal

log = logging.getLogger("pictex")

Diag = Optional[Callable[[str], None]]


def _emit(diag: Diag, msg: str) -> None:
    if diag is None:
        log.warning(msg)
    else:
        diag(msg)


def resolve(measure, unit: int, mode: str) -> Dimen:
    """Coordinate text times the unit, or a raw length in dimension mode."""
    if mode == "coordinate":
        if not isinstance(measure, str):
            raise ValueError(f"expected a coordinate number, got a dimension {Dimen(measure)}")
        return Dimen(fmul(parse_decimal(measure), unit))
    if isinstance(measure, str):
        raise ValueError(f"Illegal unit of measure: {measure!r} needs a unit in dimension mode")
    return Dimen(measure)


@dataclass
class CoordSystem:
    xunit: int = UNITY
    yunit: int = UNITY
    xorigin: int = 0
    yorigin: int = 0
    xref: str = "0"
    yref: str = "0"
    mode: str = "coordinate"

    def x(self, m) -> Dimen:
        return resolve(m, self.xunit, self.mode)

    def y(self, m) -> Dimen:
        return resolve(m, self.yunit, self.mode)

    def xdistance(self, m) -> Dimen:
        return self.x(m)

    def ydistance(self, m) -> Dimen:
        return self.y(m)

    def set_reference(self, xref: str, yref: str) -> None:
        self.xref, self.yref = xref, yref
        self.refresh_origin()

    def refresh_origin(self) -> None:
        self.xorigin = fmul(parse_decimal(self.xref), self.xunit)
        self.yorigin = fmul(parse_decimal(self.yref), self.yunit)


@dataclass
class Rotation:
    active: bool = False
    cos: int = UNITY  # decimal factors, in sp
    sin: int = 0
    xpivot: int = 0
    ypivot: int = 0

    def about_pivot(self, x: int, y: int) -> tuple[int, int]:
        if not self.active:
            return x, y
        a, b = x - self.xpivot, y - self.ypivot
        c = fmul(self.cos, a) - fmul(self.sin, b)
        d = fmul(self.cos, b) + fmul(self.sin, a)
        return c + self.xpivot, d + self.ypivot

    def only(self, x: int, y: int) -> tuple[int, int]:
        if not self.active:
            return x, y
        return (fmul(self.cos, x) - fmul(self.sin, y),
                fmul(self.cos, y) + fmul(self.sin, x))

    def reverse(self, x: int, y: int) -> tuple[int, int]:
        if not self.active:
            return x, y
        return (fmul(self.cos, x) + fmul(self.sin, y),
                fmul(self.cos, y) - fmul(self.sin, x))


def orient_shifts(w: int, h: int, d: int, markers: str = "",
                  offset: tuple[int, int] = (0, 0), diag: Diag = None) -> tuple[int, int]:
    """Where the reference point sits relative to the box's own origin."""
    xshift = half(w)
    yshift = half(h) - half(d)
    for m in markers:
        if m == "l":
            xshift = 0
        elif m == "r":
            xshift = w
        elif m == "b":
            yshift = -d
        elif m == "B":
            yshift = 0
        elif m == "t":
            yshift = h
        elif not m.isspace():
            _emit(diag, f"unknown orientation marker `{m}' ignored")
    return xshift - offset[0], yshift - offset[1]


@dataclass(frozen=True)
class PlacedItem:
    kind: str  # dot | rule | textbox | symbol
    x: int
    y: int
    w: int = 0
    h: int = 0
    d: int = 0
    payload: Any = None

    def moved(self, dx: int, dy: int) -> "PlacedItem":
        return replace(self, x=self.x + dx, y=self.y + dy)


class Box:
    """Anything with width/height/depth that can draw itself at a point."""

    width: int
    height: int
    depth: int

    def emit(self, canvas: "Canvas", x: int, y: int, markers: str = "") -> None:
        pass


@dataclass
class EmptyBox(Box):
    width: int = 0
    height: int = 0
    depth: int = 0


@dataclass
class RuleBox(Box):
    """A box whose ink is a set of filled rectangles (x0, y0, x1, y1)."""

    width: int
    height: int
    depth: int
    rects: list = field(default_factory=list)

    def emit(self, canvas, x, y, markers=""):
        for x0, y0, x1, y1 in self.rects:
            canvas.items.append(PlacedItem("rule", x + x0, y + y0, x1 - x0, y1 - y0, 0))


@dataclass
class Canvas:
    items: list = field(default_factory=list)
    xleft: int = MAX_DIMEN
    xright: int = -MAX_DIMEN
    ybot: int = MAX_DIMEN
    ytop: int = -MAX_DIMEN

    def account(self, x: int, y: int, w: int, h: int, d: int) -> None:
        self.xleft = min(self.xleft, x)
        self.xright = max(self.xright, x + w)
        self.ybot = min(self.ybot, y - d)
        self.ytop = max(self.ytop, y + h)

    @property
    def empty(self) -> bool:
        return self.xleft > self.xright

    def bbox(self) -> tuple[int, int, int, int]:
        if self.empty:
            return 0, 0, 0, 0
        return self.xleft, self.ybot, self.xright, self.ytop

    def finalize(self) -> "PictureBox":
        xl, yb, xr, yt = self.bbox()
        if yb > 0:
            s = yb
        elif yt < 0:
            s = yt
        else:
            s = 0
        return PictureBox(width=Dimen(xr - xl), height=Dimen(max(0, yt - s)),
                          depth=Dimen(max(0, s - yb)), xleft=Dimen(xl), ybot=Dimen(yb),
                          xright=Dimen(xr), ytop=Dimen(yt), shift=Dimen(s),
                          items=tuple(self.items))


@dataclass(frozen=True)
class PictureBox(Box):
    """A finished picture; its reference point is internal (xleft, shift)."""

    width: int
    height: int
    depth: int
    xleft: int
    ybot: int
    xright: int
    ytop: int
    shift: int
    items: tuple = ()

    @property
    def save(self) -> tuple[int, int]:
        return self.xleft, self.shift

    def emit(self, canvas, x, y, markers=""):
        dx, dy = x - self.xleft, y - self.shift
        canvas.items.extend(it.moved(dx, dy) for it in self.items)


def place(canvas: Canvas, box: Box, x: int, y: int, markers: str = "",
          account: bool = True) -> None:
    """Put a box's reference point at (x, y) in canvas coordinates."""
    box.emit(canvas, x, y, markers)
    if account:
        canvas.account(x, y, box.width, box.height, box.depth)


def put(canvas: Canvas, coords: CoordSystem, rotation: Rotation, box: Box,
        x: int, y: int, markers: str = "", offset=(0, 0), account: bool = True,
        diag: Diag = None) -> tuple[int, int]:
    """Place ``box`` at resolved internal point (x, y); returns the position used."""
    xs, ys = orient_shifts(box.width, box.height, box.depth, markers, offset, diag)
    X, Y = rotation.about_pivot(x, y)
    X -= coords.xorigin + xs
    Y -= coords.yorigin + ys
    place(canvas, box, X, Y, markers, account)
    return X, Y


def dimenput(canvas: Canvas, box: Box, x: int, y: int, markers: str = "",
             offset=(0, 0), account: bool = True, diag: Diag = None) -> tuple[int, int]:
    """Placement in raw canvas coordinates: no origin, no rotation."""
    xs, ys = orient_shifts(box.width, box.height, box.depth, markers, offset, diag)
    X, Y = x - xs, y - ys
    place(canvas, box, X, Y, markers, account)
    return X, Y


# ---------------------------------------------------------------- text


@dataclass(frozen=True)
class TextMetrics:
    em: int = 10 * UNITY
    baselineskip: int = 12 * UNITY

    @property
    def advance(self) -> int:
        return self.em // 2

    @property
    def ascender(self) -> int:
        return self.em * 7 // 10

    @property
    def descender(self) -> int:
        return self.em * 3 // 10

    def line(self, text: str) -> tuple[int, int, int]:
        if not text:
            return 0, 0, 0
        return len(text) * self.advance, self.ascender, self.descender


@dataclass(frozen=True)
class TextLine:
    text: str
    anchor: str  # start | middle | end
    em: int


@dataclass
class TextBlock(Box):
    """Lines of text laid out with synthetic metrics.

    ``lines[i]`` is drawn with its left edge at ``xs[i]`` and baseline at
    ``baselines[i]``, both relative to the block's reference point.
    """

    lines: list
    alignment: str = "c"
    width: int = 0
    height: int = 0
    depth: int = 0
    xs: list = field(default_factory=list)
    widths: list = field(default_factory=list)
    baselines: list = field(default_factory=list)
    em: int = 10 * UNITY

    def emit(self, canvas, x, y, markers=""):
        if len(self.lines) == 1:
            al = "r" if "r" in markers else "l" if "l" in markers else "c"
        else:
            al = self.alignment
        anchor = {"l": "start", "c": "middle", "r": "end"}[al]
        for text, lx, lw, by in zip(self.lines, self.xs, self.widths, self.baselines):
            if not text:
                continue
            ax = lx + {"start": 0, "middle": lw // 2, "end": lw}[anchor]
            m = self.em
            canvas.items.append(PlacedItem("textbox", x + ax, y + by, lw, m * 7 // 10,
                                           m * 3 // 10, TextLine(text, anchor, m)))


def layout_text_block(lines: Sequence[str], alignment: str = "c", leading: int = 0,
                      anchor: str = "bottom", metrics: TextMetrics = TextMetrics(),
                      baseline_glue: bool = False) -> TextBlock:
    """Stack lines vertically.

    ``anchor`` picks which baseline becomes the reference: the last
    (``bottom``) or the first (``top``).  With ``baseline_glue`` the gap
    follows baselineskip with a 1pt fallback, otherwise exactly ``leading``
    separates consecutive line boxes.
    """
    if leading < 0:
        raise ValueError("leading must be non-negative")
    lines = list(lines)
    if not lines:
        return TextBlock([], alignment, em=metrics.em)
    ext = [metrics.line(t) for t in lines]
    width = max(e[0] for e in ext)
    # baselines measured downward from the first baseline
    down = [0]
    for (pw, ph, pd), (w, h, d) in zip(ext, ext[1:]):
        if baseline_glue:
            glue = metrics.baselineskip - pd - h
            if glue < 0:
                glue = UNITY
        else:
            glue = leading
        down.append(down[-1] + pd + glue + h)
    first_h, last_d = ext[0][1], ext[-1][2]
    total = first_h + down[-1] + last_d
    if anchor == "top":
        ref = 0
    else:
        ref = down[-1]
    baselines = [ref - v for v in down]
    height = first_h + ref
    depth = total - height
    xs = []
    for w, _, _ in ext:
        if alignment == "l":
            xs.append(0)
        elif alignment == "r":
            xs.append(width - w)
        else:
            xs.append((width - w) // 2)
    return TextBlock(lines, alignment, width, height, depth, xs,
                     [e[0] for e in ext], baselines, metrics.em)


def text_box(text: str, metrics: TextMetrics = TextMetrics()) -> TextBlock:
    return layout_text_block([text], "c", 0, "bottom", metrics)
