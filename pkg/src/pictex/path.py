"""Curve engines: joins, arcs, arrows, rules, bars, rectangles and frames.

Functions here take a :class:`~pictex.context.Picture` and coordinates that
are already resolved to internal lengths but not yet rotated; rotation and
origin handling happen inside, at the same points the macros apply them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

from .fixed import (UNITY, Dimen, divide, fmul, half, imul, parse_decimal, parse_dimen,
                    pythag, sincos, tdiv)
from .geom import EmptyBox, PlacedItem, RuleBox, Box
from .pen import emit_dot

if TYPE_CHECKING:
    from .context import Picture

WMIN = parse_dimen("2.7pt")
WMAX = parse_dimen("5.3pt")
_ARC_SIN = parse_decimal("4.17684")
_ARC_COS = parse_decimal("31.72624")
_ALMOST_15 = parse_dimen("14.9999pt")
_DEG_TO_32RAD = parse_decimal("100.53096")


@dataclass
class ArcLengthModel:
    mid: int
    full: int
    w: int = 0
    beta: int = UNITY
    gamma: int = 0
    quadratic: bool = False

    def t_at(self, distance: int) -> int:
        v = divide(distance, self.full)
        if not self.quadratic:
            return v
        return fmul(v, fmul(v, self.gamma) + self.beta)


def inverse_model(mid: int, full: int) -> ArcLengthModel:
    """Fit t(v) = v(beta + gamma v) from the half-arc fraction w = 8 mid/full."""
    w = divide(imul(8, mid), full)
    if w < WMIN or w > WMAX:
        return ArcLengthModel(mid, full, w)
    f = 32 * UNITY - fmul(w, w)
    g = fmul(w, 8 * UNITY - w)
    beta = divide(f, g)
    return ArcLengthModel(mid, full, w, beta, UNITY - beta, True)


@dataclass
class PathCursor:
    xS: int = 0
    yS: int = 0
    distacross: int = 0
    intervalno: int = 0
    origin: tuple = (0, 0)
    model: Optional[ArcLengthModel] = None


@dataclass(frozen=True)
class QuadSegment:
    S: tuple
    M: tuple
    E: tuple
    B: tuple
    C: tuple

    @classmethod
    def through(cls, S, M, E) -> "QuadSegment":
        B, C = [], []
        for s, m, e in zip(S, M, E):
            a, b = m - s, e - m
            B.append(imul(3, a) - b)
            C.append(imul(2, b) - imul(2, a))
        return cls(tuple(S), tuple(M), tuple(E), tuple(B), tuple(C))

    def point(self, t: int) -> tuple[int, int]:
        """Evaluate at decimal factor t (in sp) the way the plotter does."""
        return tuple(fmul(t, fmul(t, c) + b) + s for s, b, c in zip(self.S, self.B, self.C))

    def arc_lengths(self) -> tuple[int, int]:
        """(half-arc, full arc) by two Simpson panels on |P'|."""
        xp, yp = self.B
        dxp, dyp = half(self.C[0]), half(self.C[1])
        f = []
        for _ in range(5):
            f.append(pythag(xp, yp))
            xp += dxp
            yp += dyp
        mid = tdiv(f[0] + imul(4, f[1]) + f[2], 12)
        full = tdiv(f[2] + imul(4, f[3]) + f[4], 12) + mid
        return mid, full


def _plot(pic: "Picture", x: int, y: int) -> None:
    o = pic.state.cursor.origin
    if emit_dot(pic.canvas, pic.state.pen, x, y, o, pic.shared.sink) and pic.shared.trail:
        pic.shared.trail.write(x - o[0], y - o[1])


def start(pic: "Picture", x: int, y: int) -> None:
    st = pic.state
    c = st.cursor
    c.origin = (st.coords.xorigin + st.pen.symbol.xshift,
                st.coords.yorigin + st.pen.symbol.yshift)
    c.xS, c.yS = st.rotation.about_pivot(x, y)
    st.pen.reset_phase()
    c.distacross = 0
    c.intervalno = 0
    pic.shared.total = 0


def ljoin(pic: "Picture", x: int, y: int) -> None:
    st, c, pen = pic.state, pic.state.cursor, pic.state.pen
    c.intervalno += 1
    xE, yE = st.rotation.about_pivot(x, y)
    xdiff, ydiff = xE - c.xS, yE - c.yS
    arclength = pythag(xdiff, ydiff)
    pic.shared.total += arclength
    if not pen.dashed:
        n = tdiv(arclength, pen.spacing)
        if n < 1:
            n = 1
        xdiff, ydiff = tdiv(xdiff, n), tdiv(ydiff, n)
        xp, yp = c.xS, c.yS
        for _ in range(n + 1):
            _plot(pic, xp, yp)
            xp += xdiff
            yp += ydiff
    elif c.distacross > arclength:
        c.distacross -= arclength
    else:
        while c.distacross < arclength:
            t = divide(c.distacross, arclength)
            _plot(pic, fmul(t, xdiff) + c.xS, fmul(t, ydiff) + c.yS)
            c.distacross += pen.spacing
            c.distacross = pen.advance_dashing(c.distacross)
        c.distacross -= arclength
    c.xS, c.yS = xE, yE


def qjoin(pic: "Picture", xm: int, ym: int, xe: int, ye: int) -> None:
    st, c, pen = pic.state, pic.state.cursor, pic.state.pen
    c.intervalno += 1
    M = st.rotation.about_pivot(xm, ym)
    E = st.rotation.about_pivot(xe, ye)
    seg = QuadSegment.through((c.xS, c.yS), M, E)
    mid, arclength = seg.arc_lengths()
    pic.shared.total += arclength
    if c.distacross > arclength:
        c.distacross -= arclength
    else:
        if arclength > 0:
            c.model = inverse_model(mid, arclength)
            if not c.model.quadratic:
                _linear_fallback_note(pic, c, xm, ym)
        while c.distacross < arclength:
            t = c.model.t_at(c.distacross)
            _plot(pic, *seg.point(t))
            c.distacross += pen.spacing
            c.distacross = pen.advance_dashing(c.distacross)
        c.distacross -= arclength
    c.xS, c.yS = E


def _linear_fallback_note(pic, c, xm, ym) -> None:
    from .fixed import format_scaled

    n2 = 2 * c.intervalno
    t = format_scaled(tdiv(c.model.w, 8))
    co = pic.state.coords
    px = format_scaled(tdiv(xm * UNITY, co.xunit)) if co.mode == "coordinate" else str(Dimen(xm))
    py = format_scaled(tdiv(ym * UNITY, co.yunit)) if co.mode == "coordinate" else str(Dimen(ym))
    pic.diag(f"{n2 - 1}th point ({px},{py}) being plotted doesn't lie in the "
             f"middle third of the arc between the {n2 - 2}th and {n2}th points: "
             f"[arc length {n2 - 2} to {n2 - 1}]/[arc length {n2 - 2} to {n2}]={t}.")


def plot_curve(pic: "Picture", points: Sequence[tuple[int, int]], mode: str) -> None:
    """Linear or quadratic curve through resolved points."""
    if mode == "linear":
        if len(points) < 2:
            raise ValueError("a linear plot needs at least two points")
        start(pic, *points[0])
        for p in points[1:]:
            ljoin(pic, *p)
    elif mode == "quadratic":
        if len(points) < 3 or len(points) % 2 == 0:
            raise ValueError(f"a quadratic plot needs an odd number (>= 3) of points, got {len(points)}")
        start(pic, *points[0])
        for i in range(1, len(points), 2):
            qjoin(pic, *points[i], *points[i + 1])
    else:
        raise ValueError(f"unknown curve mode {mode!r}")


def histogram(pic: "Picture", points: Sequence[tuple[int, int]]) -> None:
    if len(points) < 2:
        raise ValueError("a histogram needs at least two points")
    hx, hy = points[0]
    for x, y in points[1:]:
        putrectangle(pic, (0, 0), (hx, hy), (x, y))
        hx = x


# ------------------------------------------------------------------ arcs


def _rot32(x: int, y: int, c: int, s: int) -> tuple[int, int]:
    a = fmul(c, x) - fmul(s, y)
    b = fmul(c, y) + fmul(s, x)
    return tdiv(a, 32), tdiv(b, 32)


def elliptical_arc(pic: "Picture", a: str, b: str, degrees: str,
                   sx: int, sy: int, cx: int, cy: int) -> None:
    """Arc from resolved start (sx, sy) about resolved centre (cx, cy)."""
    angle = parse_dimen(f"{degrees}pt")
    sign = 1
    if not angle > 0:
        sign = -1
        angle = -angle
    if sx == cx and sy == cy:
        raise ValueError("degenerate arc: start point equals centre")
    fa, fb = parse_decimal(a), parse_decimal(b)
    xx = divide(sx - cx, parse_dimen(f"{a}pt"))
    yy = divide(sy - cy, parse_dimen(f"{b}pt"))
    start(pic, fmul(fa, xx) + cx, fmul(fb, yy) + cy)

    def step(c: int, s: int) -> None:
        nonlocal xx, yy
        xm, ym = _rot32(xx, yy, c, sign * s)
        xe, ye = _rot32(xm, ym, c, sign * s)
        qjoin(pic, fmul(fa, xm) + cx, fmul(fb, ym) + cy, fmul(fa, xe) + cx, fmul(fb, ye) + cy)
        xx, yy = xe, ye

    while angle > _ALMOST_15:
        step(_ARC_COS, _ARC_SIN)
        angle -= 15 * UNITY
    if angle > 0:
        angle = tdiv(fmul(_DEG_TO_32RAD, angle), 360)
        s, c = sincos(angle)
        step(c, s)


def circular_arc(pic: "Picture", degrees: str, sx, sy, cx, cy) -> None:
    elliptical_arc(pic, "1", "1", degrees, sx, sy, cx, cy)


# ---------------------------------------------------------------- arrows


def arrow(pic: "Picture", headlen: int, t1: str, t2: str, tip_offset: tuple[int, int],
          fx: int, fy: int, tx: int, ty: int) -> None:
    dx, dy = tx - fx, ty - fy
    if dx == 0 and dy == 0:
        raise ValueError("degenerate arrow: from and to coincide")
    ox, oy = pic.state.rotation.reverse(*tip_offset)
    xs, ys = ox + tx, oy + ty
    start(pic, xs - dx, ys - dy)
    ljoin(pic, xs, ys)
    length = pythag(dx, dy)
    cos = imul(32, divide(dx, length))
    sin = imul(32, divide(dy, length))
    f1, f2 = parse_decimal(t1), parse_decimal(t2)
    for sgn in (1, -1):
        c = tdiv(-headlen, 2)
        xm, ym = _rot32(c, fmul(sgn * f1, c), cos, sin)
        c = -headlen
        d = half(fmul(sgn * f2, c))
        xe, ye = _rot32(c, d, cos, sin)
        start(pic, xs, ys)
        qjoin(pic, xm + xs, ym + ys, xe + xs, ye + ys)


@dataclass
class ArrowsBox(Box):
    """Label flanked by two arrows pointing outward, horizontal or vertical."""

    width: int
    height: int
    depth: int
    label: Box
    vertical: bool
    span: int
    margin: int
    thickness: int
    head: int

    def emit(self, canvas, x, y, markers=""):
        lab = self.label
        size = lab.height + lab.depth if self.vertical else lab.width
        gap = 0 if size == 0 else self.margin
        lo_end = (self.span - size) // 2 - gap
        hi_start = (self.span + size) // 2 + gap
        t = self.thickness
        if self.vertical:
            cx = x + self.width // 2
            spans = [(0, lo_end, "down"), (hi_start, self.span, "up")]
            for a, b, direction in spans:
                if b > a:
                    canvas.items.append(PlacedItem("rule", cx - t // 2, y + a, t, b - a, 0))
                    tip = a if direction == "down" else b
                    canvas.items.append(PlacedItem("symbol", cx, y + tip, 0, 0, 0,
                                                   ("arrowhead", direction, self.head)))
            lx = x + (self.width - lab.width) // 2
            ly = y + self.span // 2 - (lab.height - lab.depth) // 2
        else:
            spans = [(0, lo_end, "left"), (hi_start, self.span, "right")]
            for a, b, direction in spans:
                if b > a:
                    canvas.items.append(PlacedItem("rule", x + a, y - t // 2, b - a, t, 0))
                    tip = a if direction == "left" else b
                    canvas.items.append(PlacedItem("symbol", x + tip, y, 0, 0, 0,
                                                   ("arrowhead", direction, self.head)))
            lx = x + (self.span - lab.width) // 2
            ly = y - (lab.height - lab.depth) // 2
        lab.emit(canvas, lx, ly)


def betweenarrows(pic: "Picture", label: Box, markers: str, offset, fx, fy, tx, ty) -> None:
    dx, dy = tx - fx, ty - fy
    x = fx + half(dx)
    y = fy + half(dy)
    em = pic.state.metrics.em
    margin = em * 4 // 10
    head = em * 35 // 100
    t = pic.state.style.linethickness
    if dy == 0:
        span = abs(dx)
        hh = max((label.height + label.depth) // 2, head)
        box = ArrowsBox(span, hh, hh, label, False, span, margin, t, head)
    elif dx == 0:
        span = abs(dy)
        w = max(label.width, 2 * head)
        box = ArrowsBox(w, span, 0, label, True, span, margin, t, head)
    else:
        pic.diag("betweenarrows needs a horizontal or vertical span; nothing drawn")
        return
    pic.put(box, x, y, markers, offset)


# ----------------------------------------------------------------- rules


def _trunc_pieces(items, limit: int, keep_below: bool):
    """The macro's partial pattern: pieces of ``items`` clipped to one side of limit."""
    out = []
    b = 0
    for is_rule, length in items:
        a = b
        b += length
        if keep_below:
            d, c = min(b, limit), min(a, limit)
        else:
            d, c = max(b, limit), max(a, limit)
        out.append((is_rule, d - c))
    return out


def dashed_layout(pattern, length: int, forward: bool) -> list[tuple[int, int]]:
    """Pen-down spans (from, to) in box layout order (left to right, or
    top to bottom for vertical rules).

    Forward: whole periods, then a period truncated at the residual.
    Backward: a period truncated from the other side, then whole periods
    of the reversed list; the box is anchored at the start point's side,
    so the pattern still begins at the start point.
    """
    leader = pattern.leader
    count = tdiv(length, leader)
    total = count * leader
    residual = length - total
    if forward:
        seq = list(pattern.flist) * count + _trunc_pieces(pattern.flist, residual, True)
    else:
        seq = _trunc_pieces(pattern.blist, leader - residual, False) + list(pattern.blist) * count
    spans = []
    pos = 0
    for is_rule, ln in seq:
        if is_rule and ln > 0:
            spans.append((pos, pos + ln))
        pos += ln
    return spans


def putrule(pic: "Picture", offset, x1: int, y1: int, x2: int, y2: int) -> None:
    st = pic.state
    dx, dy = x2 - x1, y2 - y1
    th = st.style.linethickness
    pen = st.pen
    if dy == 0:
        if not pen.dashed:
            if dx > 0:
                pic.put(RuleBox(dx, th, 0, [(0, 0, dx, th)]), x1, y1, "l", offset)
            else:
                pic.put(RuleBox(-dx, th, 0, [(0, 0, -dx, th)]), x2, y2, "l", offset)
        elif dx > 0:
            spans = dashed_layout(pen.pattern, dx, True)
            pic.put(RuleBox(dx, th, 0, [(a, 0, b, th) for a, b in spans]), x1, y1, "l", offset)
        else:
            n = -dx
            spans = dashed_layout(pen.pattern, n, False)
            rects = [(a, 0, b, th) for a, b in spans]
            pic.put(RuleBox(n, th, 0, rects), x1, y1, "r", offset)
    elif dx == 0:
        if not pen.dashed:
            if dy > 0:
                pic.put(RuleBox(th, dy, 0, [(0, 0, th, dy)]), x1, y1, "b", offset)
            else:
                pic.put(RuleBox(th, -dy, 0, [(0, 0, th, -dy)]), x2, y2, "b", offset)
        elif dy < 0:
            n = -dy
            spans = dashed_layout(pen.pattern, n, True)
            rects = [(0, n - b, th, n - a) for a, b in spans]
            pic.put(RuleBox(th, n, 0, rects), x1, y1, "t", offset)
        else:
            spans = dashed_layout(pen.pattern, dy, False)
            rects = [(0, dy - b, th, dy - a) for a, b in spans]
            pic.put(RuleBox(th, dy, 0, rects), x1, y1, "b", offset)
    else:
        pic.diag("putrule needs a horizontal or vertical segment; nothing drawn")


def putrectangle(pic: "Picture", offset, c1: tuple[int, int], c2: tuple[int, int]) -> None:
    x1, x2 = sorted((c1[0], c2[0]))
    y1, y2 = sorted((c1[1], c2[1]))
    x1 += offset[0]
    x2 += offset[0]
    y1 += offset[1]
    y2 += offset[1]
    st = pic.state
    if st.shade_rectangles:
        from .shade import shade_rectangle

        shade_rectangle(pic, x1, y1, x2, y2)
    i = half(st.style.linethickness)
    putrule(pic, (0, 0), x1 - i, y1, x2 + i, y1)
    putrule(pic, (0, 0), x1 - i, y2, x2 + i, y2)
    putrule(pic, (0, 0), x1, y1 - i, x1, y2 + i)
    putrule(pic, (0, 0), x2, y1 - i, x2, y2 + i)


def putbar(pic: "Picture", offset, breadth: int, x1: int, y1: int, x2: int, y2: int) -> None:
    if breadth == 0:
        putrule(pic, offset, x1, y1, x2, y2)
        return
    i = tdiv(breadth, 2)
    if y2 == y1:
        y1 -= i
        y2 += i
    elif x2 == x1:
        x1 -= i
        x2 += i
    else:
        pic.diag("putbar needs a horizontal or vertical segment; nothing drawn")
        return
    putrectangle(pic, offset, (x1, y1), (x2, y2))


@dataclass
class BarsConfig:
    offset: tuple = (0, 0)
    breadth: int = 0
    orientation: str = "y"
    baseline: object = "0"
    base_labels: Optional[tuple] = None  # (markers, offset)
    end_labels: Optional[tuple] = None


def frame(pic: "Picture", margin: int, content: Box):
    """Outline ``content`` at distance ``margin``; returns the framed picture box."""
    inner = pic.nested()
    co = inner.state.coords
    co.xunit = co.yunit = UNITY
    co.xref = co.yref = "0"
    co.xorigin = co.yorigin = 0
    inner.put(content, 0, 0, "Bl")
    a = margin
    co.mode = "dimension"
    putrectangle(inner, (0, 0), (-a, -(content.depth + a)),
                 (content.width + a, content.height + a))
    return inner.finish()


def rectangle(pic: "Picture", w: int, h: int):
    return frame(pic, 0, EmptyBox(w, h, 0))
