"""Plot area, axes with their keyword sub-language, ticks, grids and headings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from .fixed import UNITY, fmul, half, log10_of, parse_decimal, scale_down, scale_to_integers, tdiv
from .geom import Box, EmptyBox, PictureBox, text_box

if TYPE_CHECKING:
    from .context import Picture

MINUS = "−"


@dataclass
class GraphStyle:
    baselineskip: int = 12 * UNITY
    longticklength: int = 0
    shortticklength: int = 0
    tickstovaluesleading: int = 0
    valuestolabelleading: int = 0
    linethickness: int = 26214
    stackleading: int = 0
    headingtoplotskip: int = 0
    axes_visible: bool = True
    ticks_sign: str = "+"
    gridlines: bool = False
    logged: bool = False


def _frac(text: str, bs: int) -> int:
    return fmul(parse_decimal(text), bs)


def normalgraphs(baselineskip: int = 12 * UNITY) -> GraphStyle:
    bs = baselineskip
    return GraphStyle(
        baselineskip=bs,
        longticklength=_frac(".4", bs),
        shortticklength=_frac(".25", bs),
        tickstovaluesleading=_frac(".25", bs),
        valuestolabelleading=_frac(".8", bs),
        linethickness=26214,
        stackleading=_frac(".17", bs),
        headingtoplotskip=_frac("1.5", bs),
    )


@dataclass
class PlotArea:
    left: int = 0
    bottom: int = 0
    right: int = UNITY
    top: int = UNITY
    xaxislen: int = UNITY
    yaxislen: int = UNITY
    headingoffset: int = 0
    defined: bool = False


def init_inbounds(pic: "Picture") -> None:
    """Refresh the clip rectangle from the plot area, if clipping is on."""
    st = pic.state
    if not st.pen.inbounds:
        return
    a, co = st.area, st.coords
    st.pen.check = (a.left + co.xorigin, a.right + co.xorigin,
                    a.bottom + co.yorigin, a.top + co.yorigin)


def setplotarea(pic: "Picture", x1, x2, y1, y2) -> PlotArea:
    """Measures are resolved in the current mode, then made origin-relative."""
    co = pic.state.coords
    left, right = co.x(x1) - co.xorigin, co.x(x2) - co.xorigin
    bottom, top = co.y(y1) - co.yorigin, co.y(y2) - co.yorigin
    if right <= left or top <= bottom:
        raise ValueError("plot area must run from lower to higher coordinates")
    a = pic.state.area
    a.left, a.right, a.bottom, a.top = left, right, bottom, top
    a.xaxislen, a.yaxislen = right - left, top - bottom
    a.headingoffset = 0
    a.defined = True
    init_inbounds(pic)
    pic.dimenput(EmptyBox(a.xaxislen, a.yaxislen, 0), left, bottom, "bl")
    return a


def plotheading(pic: "Picture", heading: Box) -> None:
    a, style = pic.state.area, pic.state.style
    a.headingoffset += style.headingtoplotskip
    pic.dimenput(heading, a.left, a.top, "B", (half(a.xaxislen), a.headingoffset))


# ---------------------------------------------------------------- axes

_SIDES = {
    # tickxsign, tickysign, label anchor
    "bottom": (0, -1, "t"),
    "top": (0, 1, "b"),
    "left": (-1, 0, "r"),
    "right": (1, 0, "l"),
}


def _sign(text: str) -> int:
    return -1 if text == "-" else 1


def _stamp(pic: "Picture", box: PictureBox, x: int, y: int) -> None:
    """Drop a saved picture so its own origin lands on (x, y); no accounting."""
    box.emit(pic.canvas, x + box.xleft, y + box.shift)


def _rule_picture(pic: "Picture", thickness: int, rules) -> PictureBox:
    from .path import putrule

    inner = pic.nested()
    st = inner.state
    st.coords.mode = "dimension"
    st.coords.xorigin = st.coords.yorigin = 0
    st.style.linethickness = thickness
    for x, y in rules:
        putrule(inner, (0, 0), 0, 0, x, y)
    return inner.finish()


def _text_picture(pic: "Picture", entries, markers: str) -> PictureBox:
    inner = pic.nested()
    for box, x, y in entries:
        inner.dimenput(box, x, y, markers)
    return inner.finish()


class Axis:
    """One ``axis`` statement, fed keyword by keyword.

    The caller dispatches each keyword to a method and calls :meth:`finish`
    at the closing slash.  Once :meth:`ticks` has been called only the
    ``tick_*`` methods and the tick generators make sense.
    """

    def __init__(self, pic: "Picture"):
        self.pic = pic
        st = pic.state
        self.style = st.style
        self.area = st.area
        self.offset = 0
        self.visible = st.style.axes_visible
        self.label: Optional[Box] = None
        self.sides: Optional[tuple] = None
        self.xlevel = self.area.left
        self.ylevel = self.area.bottom
        self.set_up = False
        self.in_ticks = False

    # -- axis keywords

    def side(self, name: str) -> None:
        xs, ys, tbrl = _SIDES[name]
        a = self.area
        if xs == 0:
            self.ylevel = a.bottom if ys < 0 else a.top
        else:
            self.xlevel = a.left if xs < 0 else a.right
        self.sides = (xs, ys, tbrl)
        self.set_up = False

    def _require_side(self) -> tuple:
        if self.sides is None:
            raise ValueError("axis needs a side (bottom, top, left or right) first")
        return self.sides

    @property
    def horizontal(self) -> bool:
        return self._require_side()[0] == 0

    def shiftedto(self, measure) -> None:
        co = self.pic.state.coords
        if self.horizontal:
            self.ylevel = co.y(measure) - co.yorigin
        else:
            self.xlevel = co.x(measure) - co.xorigin

    def set_visible(self, flag: bool) -> None:
        self.visible = flag

    def set_label(self, box: Box) -> None:
        self.label = box

    # -- geometry shared by the axis rule and the ticks

    @property
    def start(self) -> int:
        return self.area.left if self.horizontal else self.area.bottom

    @property
    def end(self) -> int:
        return self.area.right if self.horizontal else self.area.top

    @property
    def length(self) -> int:
        return self.area.xaxislen if self.horizontal else self.area.yaxislen

    @property
    def unit(self) -> int:
        co = self.pic.state.coords
        return co.xunit if self.horizontal else co.yunit

    @property
    def origin(self) -> int:
        co = self.pic.state.coords
        return co.xorigin if self.horizontal else co.yorigin

    def _setup(self) -> None:
        if self.set_up:
            return
        self.set_up = True
        if self.horizontal:
            self.xlevel = self.area.left
        else:
            self.ylevel = self.area.bottom
        if self.visible:
            xs, ys, _ = self.sides
            L = self.length
            rule = (abs(ys) * L, abs(xs) * L)
            box = _rule_picture(self.pic, self.style.linethickness, [rule])
            self._place(box, self.start)

    def _place(self, box: PictureBox, location: int) -> None:
        if self.horizontal:
            _stamp(self.pic, box, location, self.ylevel)
        else:
            _stamp(self.pic, box, self.xlevel, location)

    # -- ticks

    def ticks(self) -> None:
        self._require_side()
        self._setup()
        st = self.style
        self.in_ticks = True
        self.inout = _sign(st.ticks_sign)
        self.ticklength = st.longticklength
        self.tickwidth = st.linethickness
        self.across = st.gridlines
        self.logged = st.logged
        self.tickcase = 0
        self.values: deque = deque()
        self.pending: list = []
        self._tickbox = None

    def _invalidate(self) -> None:
        self._tickbox = None

    def tick_inout(self, inward: bool) -> None:
        self.inout = -1 if inward else 1
        self._invalidate()

    def tick_length(self, length: int) -> None:
        self.ticklength = length
        self._invalidate()

    def tick_long(self) -> None:
        self.tick_length(self.style.longticklength)

    def tick_short(self) -> None:
        self.tick_length(self.style.shortticklength)

    def tick_width(self, width: int) -> None:
        self.tickwidth = width
        self._invalidate()

    def tick_across(self, flag: bool) -> None:
        self.across = flag
        self._invalidate()

    def tick_logged(self, flag: bool) -> None:
        self.logged = flag

    def tick_unlabeled(self) -> None:
        self.tickcase = 0

    def tick_numbered(self) -> None:
        self.tickcase = 1

    def tick_withvalues(self, values: Iterable[str]) -> None:
        self.values = deque(values)
        self.tickcase = 2 if self.values else 0

    @property
    def tickbox(self) -> PictureBox:
        if self._tickbox is None:
            xs, ys, _ = self.sides
            rules = []
            if self.ticklength > 0:
                n = self.inout * self.ticklength
                rules.append((xs * n, ys * n))
            if self.across:
                rules.append((-xs * self.area.xaxislen, -ys * self.area.yaxislen))
            self._tickbox = _rule_picture(self.pic, self.tickwidth, rules)
        return self._tickbox

    def _update_offset(self) -> None:
        d = self.inout * self.ticklength
        if d > self.offset:
            self.offset = d

    def _next_value(self) -> str:
        v = self.values.popleft()
        if not self.values:
            self.tickcase = 0
        return v

    def _tick(self, location: int) -> None:
        self._place(self.tickbox, location)

    def quantity(self, n: int) -> list[int]:
        """n evenly spaced ticks from the start of the axis; returns their locations."""
        placed = []
        if n > 1:
            self._update_offset()
            incr = tdiv(self.length, n - 1)
            loc = self.start
            while not loc > self.end:
                self._tick(loc)
                placed.append(loc)
                if self.tickcase == 2:
                    self.pending.append((loc, self._next_value()))
                loc += incr
        return placed

    def _common(self, text: str) -> int:
        t = log10_of(text) if self.logged else text
        loc = fmul(parse_decimal(t), self.unit) - self.origin
        self._tick(loc)
        if self.tickcase == 1:
            label = text
            if loc < -self.origin and label.startswith("-"):
                label = MINUS + label[1:]
            self.pending.append((loc, label))
        elif self.tickcase == 2:
            self.pending.append((loc, self._next_value()))
        return loc

    def at(self, coords: Sequence[str]) -> list[int]:
        self._update_offset()
        return [self._common(c) for c in coords]

    def from_to_by(self, start: str, stop: str, step: str) -> list[int]:
        self._update_offset()
        f, t, d, scale = scale_to_integers(start, stop, step)
        integral = all("." not in a for a in (start, stop, step))
        if d < 0 or f > t:
            self.pic.diag(f"ticks from {start} to {stop} by {step} produce no ticks")
            return []
        out = []
        while not f > t:
            text = str(f // scale) if integral else scale_down(f, scale)
            out.append(self._common(text))
            f += d
        return out

    # -- closing

    def _place_values(self) -> None:
        st = self.style
        self.offset += st.tickstovaluesleading
        metrics = self.pic.state.metrics
        xs, ys, _ = self.sides
        if self.horizontal:
            box = _text_picture(self.pic, [(text_box(s, metrics), loc, self.ylevel)
                                           for loc, s in self.pending], "B")
            a = self.ylevel - box.shift + ys * self.offset
            a += -box.height if ys < 0 else box.depth
            self.offset += box.height + box.depth
            self.pic.dimenput(box, 0, a, "Bl", (box.xleft, box.shift))
        else:
            box = _text_picture(self.pic, [(text_box(s, metrics), self.xlevel, loc)
                                           for loc, s in self.pending], "r")
            a = self.xlevel - box.xleft + xs * self.offset
            if xs < 0:
                a -= box.width
            self.offset += box.width
            self.pic.dimenput(box, a, 0, "Bl", (box.xleft, box.shift))

    def _place_label(self) -> None:
        lab = self.label
        xs, ys, tbrl = self.sides
        self.offset += self.style.valuestolabelleading
        if self.horizontal:
            self.pic.dimenput(lab, self.xlevel, self.ylevel, tbrl,
                              (half(self.length), ys * self.offset))
            self.offset += lab.depth + lab.height
        else:
            self.pic.dimenput(lab, self.xlevel, self.ylevel, tbrl,
                              (xs * self.offset, half(self.length)))
        self.label = None

    def finish(self) -> None:
        self._require_side()
        if self.in_ticks and self.pending:
            self._place_values()
            self.pending = []
        self._setup()
        if self.label is not None:
            self._place_label()
        if self.sides[1] > 0:
            a = self.ylevel + self.offset - self.area.top
            if a > self.area.headingoffset:
                self.area.headingoffset = a


def grid(pic: "Picture", columns: int, rows: int) -> None:
    """A columns x rows cell grid over the plot area."""
    for side, n in (("bottom", columns), ("left", rows)):
        ax = Axis(pic)
        ax.side(side)
        ax.set_visible(False)
        ax.ticks()
        ax.tick_length(0)
        ax.tick_across(True)
        ax.quantity(n + 1)
        ax.finish()
