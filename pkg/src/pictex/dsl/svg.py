"""SVG back end.

Canvas y grows upward, SVG y grows downward, so every y is negated.  All
numbers are points printed with exactly five decimals, which makes the
output a pure function of the sp values.
"""

from __future__ import annotations

from typing import Optional
from xml.sax.saxutils import escape

from ..fixed import UNITY
from ..geom import PictureBox, PlacedItem, TextLine
from ..pen import Symbol


def fmt(sp: int) -> str:
    """sp to pt with five decimals, rounding half away from zero."""
    q, r = divmod(abs(sp) * 100000, UNITY)
    if 2 * r >= UNITY:
        q += 1
    if q == 0:
        return "0.00000"
    return ("-" if sp < 0 else "") + "%d.%05d" % divmod(q, 100000)


def _rect(x: int, y: int, w: int, h: int) -> str:
    return (f'<rect x="{fmt(x)}" y="{fmt(-(y + h))}" width="{fmt(w)}" '
            f'height="{fmt(h)}"/>')


def _text(x: int, y: int, text: str, anchor: str, em: int) -> str:
    return (f'<text x="{fmt(x)}" y="{fmt(-y)}" font-size="{fmt(em)}" '
            f'text-anchor="{anchor}">{escape(text)}</text>')


def _arrowhead(x: int, y: int, direction: str, head: int) -> str:
    half = head // 2
    # (along, across) unit pairs for the back corners
    dx, dy = {"left": (1, 0), "right": (-1, 0), "up": (0, -1), "down": (0, 1)}[direction]
    pts = [(x, y),
           (x + dx * head - dy * half, y + dy * head + dx * half),
           (x + dx * head + dy * half, y + dy * head - dx * half)]
    return '<polygon points="' + " ".join(f"{fmt(a)},{fmt(-b)}" for a, b in pts) + '"/>'


def _symbol(it: PlacedItem, s: Symbol) -> Optional[str]:
    if s.shape == "disk":
        r = s.size[0]
        return f'<circle cx="{fmt(it.x + r)}" cy="{fmt(-it.y)}" r="{fmt(r)}"/>'
    if s.shape == "rect":
        return _rect(it.x, it.y, s.width, s.height)
    if s.shape == "glyph":
        return _text(it.x + s.width // 2, it.y, s.text, "middle", s.em)
    return None


def element(it: PlacedItem) -> Optional[str]:
    if it.kind == "rule":
        return _rect(it.x, it.y, it.w, it.h)
    if it.kind == "textbox":
        t: TextLine = it.payload
        return _text(it.x, it.y, t.text, t.anchor, t.em)
    p = it.payload
    if isinstance(p, Symbol):
        return _symbol(it, p)
    if isinstance(p, tuple) and p and p[0] == "arrowhead":
        return _arrowhead(it.x, it.y, p[1], p[2])
    return None


def emit_svg(items, view: tuple[int, int, int, int]) -> bytes:
    """``view`` is (xleft, ybot, xright, ytop) in sp."""
    x0, y0, x1, y1 = view
    w, h = x1 - x0, y1 - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(w)}pt" height="{fmt(h)}pt" '
        f'viewBox="{fmt(x0)} {fmt(-y1)} {fmt(w)} {fmt(h)}">',
        '<g fill="black" stroke="none" font-family="serif">',
    ]
    for it in items:
        e = element(it)
        if e is not None:
            out.append(e)
    out += ["</g>", "</svg>"]
    return ("\n".join(out) + "\n").encode("utf-8")


def picture_svg(box: PictureBox) -> bytes:
    return emit_svg(box.items, (box.xleft, box.ybot, box.xright, box.ytop))

