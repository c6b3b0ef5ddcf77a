"""Shading: symbols stamped on a checkerboard lattice between two boundaries.

Horizontal shading reuses the vertical code with the axes swapped: the
"column" coordinate is y and the "row" coordinate is x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

from .fixed import UNITY, divide, fmul, lattice, parse_dimen
from .pen import Symbol

if TYPE_CHECKING:
    from .context import Picture

SMIDGE = -parse_dimen(".2pt")


def override(default: int, text: Optional[str]) -> int:
    """Empty keeps the default, ``z`` means zero, anything else is a length."""
    if text is None or text.strip() == "":
        return default
    if text.strip() == "z":
        return 0
    return parse_dimen(text)


@dataclass(frozen=True)
class ShadeSymbol:
    symbol: Symbol
    l: int
    r: int
    b: int
    t: int


def set_shade_symbol(symbol: Symbol, overrides: Sequence[Optional[str]] = (None,) * 4) -> ShadeSymbol:
    """``symbol`` must already carry its anchor shifts."""
    s = symbol
    l = override(s.xshift + SMIDGE, overrides[0])
    r = override(s.width - s.xshift + SMIDGE, overrides[1])
    b = override(s.depth + s.yshift + SMIDGE, overrides[2])
    t = override(s.height - s.yshift + SMIDGE, overrides[3])
    return ShadeSymbol(s, l, r, b, t)


# The original's default shade symbol is a 5pt period, like the plot symbol.
DEFAULT_SHADE_SYMBOL = set_shade_symbol(Symbol.disk())


@dataclass
class Band:
    """Previous triple of a shading run, in (column, low, high) order."""

    horizontal: bool
    xS: int
    ybS: int
    ytS: int
    origin: tuple


@dataclass
class ShadeState:
    span: int = 5 * UNITY
    xanchor: int = 0
    yanchor: int = 0
    xref: str = "0"
    yref: str = "0"
    symbol: ShadeSymbol = DEFAULT_SHADE_SYMBOL
    band: Optional[Band] = None


def set_shade_grid(pic: "Picture", span: Optional[int] = None, anchor=None) -> None:
    sh, co = pic.state.shade, pic.state.coords
    if span is not None:
        sh.span = span
    if sh.span <= 0:
        raise ValueError("shade grid span must be positive")
    if co.mode == "coordinate":
        if anchor is not None:
            sh.xref, sh.yref = anchor
        sh.xanchor = co.x(sh.xref)
        sh.yanchor = co.y(sh.yref)
    elif anchor is not None:
        sh.xanchor, sh.yanchor = co.x(anchor[0]), co.y(anchor[1])


def band_units(pic, horizontal: bool):
    co = pic.state.coords
    return (co.yunit, co.xunit) if horizontal else (co.xunit, co.yunit)


def _anchors(pic, horizontal: bool) -> tuple[int, int]:
    sh = pic.state.shade
    return (sh.yanchor, sh.xanchor) if horizontal else (sh.xanchor, sh.yanchor)


def start_shade(pic: "Picture", horizontal: bool, a: int, lo: int, hi: int) -> Band:
    """Begin a band; arguments are resolved internal lengths in band order."""
    st = pic.state
    sym = st.shade.symbol.symbol
    origin = (st.coords.xorigin + sym.xshift, st.coords.yorigin + sym.yshift)
    st.shade.band = Band(horizontal, a, lo, hi, origin)
    return st.shade.band


def _shrinkages(pic, horizontal: bool, overrides) -> tuple[int, int, int, int]:
    s = pic.state.shade.symbol
    ov = overrides or (None,) * 4
    l, r, b, t = (override(v, o) for v, o in zip((s.l, s.r, s.b, s.t), ov))
    # column-low, column-high, row-low, row-high
    return (b, t, l, r) if horizontal else (l, r, b, t)


def lshade(pic: "Picture", a: int, lo: int, hi: int, overrides=None) -> None:
    band = pic.state.shade.band
    if band is None:
        raise ValueError("shading needs a starting triple")
    dxE = a - band.xS
    tB = divide(hi - band.ytS, dxE)
    bB = divide(lo - band.ybS, dxE)

    def limits(dx):
        return fmul(dx, bB) + band.ybS, fmul(dx, tB) + band.ytS

    _shade(pic, band, a, limits, overrides)
    band.xS, band.ybS, band.ytS = a, lo, hi


def getcoeffs(x1: int, y1: int, x2: int, y2: int, x3: int, y3: int) -> tuple[int, int]:
    """(B, C) with y(x) ~ y1 + B dx + C dx^2, dx = x - x1, by divided differences."""
    e = x2 - x1
    f = divide(y2 - y1, e)
    h = x3 - x2
    g = divide(y3 - y2, h) - f
    c = divide(g, h + e)
    b = -fmul(c, e) + f
    return b, c


def qshade(pic: "Picture", am: int, lom: int, him: int, a: int, lo: int, hi: int,
           overrides=None) -> None:
    band = pic.state.shade.band
    if band is None:
        raise ValueError("shading needs a starting triple")
    bB, bC = getcoeffs(band.xS, band.ybS, am, lom, a, lo)
    tB, tC = getcoeffs(band.xS, band.ytS, am, him, a, hi)

    def limits(dx):
        top = fmul(dx, fmul(dx, tC) + tB) + band.ytS
        bot = fmul(dx, fmul(dx, bC) + bB) + band.ybS
        return bot, top

    _shade(pic, band, a, limits, overrides)
    band.xS, band.ybS, band.ytS = a, lo, hi


def shade_stations(band: Band, a_end: int, limits, span: int, anchors: tuple[int, int],
                   shrink: tuple[int, int, int, int]) -> list[tuple[int, int]]:
    """(column, row) lattice stations for one band step, in emission order."""
    E, F, G, H = shrink
    xanchor, yanchor = anchors
    parity, xpos = lattice(xanchor, span, band.xS + E)
    last = a_end - F
    out = []
    while not xpos > last:
        bot, top = limits(xpos - band.xS)
        top -= H
        bot += G
        yloc = yanchor + (span if parity % 2 else 0)
        _, ypos = lattice(yloc, 2 * span, bot)
        while not ypos > top:
            out.append((xpos, ypos))
            ypos += 2 * span
        xpos += span
        parity += 1
    return out


def _shade(pic, band: Band, a_end: int, limits, overrides) -> None:
    st = pic.state
    sh = st.shade
    stations = shade_stations(band, a_end, limits, sh.span, _anchors(pic, band.horizontal),
                              _shrinkages(pic, band.horizontal, overrides))
    sym = sh.symbol.symbol
    ox, oy = band.origin
    for c, r in stations:
        x, y = (r, c) if band.horizontal else (c, r)
        x, y = st.rotation.about_pivot(x, y)
        sym.emit(pic.canvas, x - ox, y - oy)


def shade_rectangle(pic: "Picture", x1: int, y1: int, x2: int, y2: int) -> None:
    if x2 - x1 < y2 - y1:
        start_shade(pic, False, x1, y1, y2)
        lshade(pic, x2, y1, y2)
    else:
        start_shade(pic, True, y1, x1, x2)
        lshade(pic, y2, x1, x2)
