"""Dash patterns on curves and on rules behave differently.

Curves carry the pattern's phase from one segment into the next, so a line
drawn in two halves looks the same as one drawn whole.  Rules are laid out
as boxes of whole pattern periods plus one truncated period, anchored at the
start point.
"""

from pictex.context import Picture
from pictex.fixed import UNITY, parse_dimen
from pictex.path import dashed_layout, ljoin, putrule, start
from pictex.pen import set_dash_pattern

PT = UNITY
pattern = set_dash_pattern([parse_dimen("3pt"), parse_dimen("2pt"), PT, parse_dimen("2pt")])


def fresh():
    p = Picture()
    p.state.coords.mode = "dimension"
    p.state.pen.set_pattern(pattern)
    return p


whole, halves = fresh(), fresh()
start(whole, 0, 0)
ljoin(whole, 100 * PT, 0)
start(halves, 0, 0)
ljoin(halves, 50 * PT, 0)
ljoin(halves, 100 * PT, 0)
print(f"dots on a 100pt line: {len(whole.canvas.items)} whole, {len(halves.canvas.items)} in halves")

print("\npen-down spans of a 23pt dashed rule:")
for forward in (True, False):
    spans = dashed_layout(pattern, 23 * PT, forward)
    text = ", ".join(f"{a / PT:g}-{b / PT:g}" for a, b in spans)
    print(f"  {'left to right' if forward else 'right to left'}: {text}")

p = fresh()
putrule(p, (0, 0), 0, 0, 0, -23 * PT)
print("\na rule drawn downwards occupies, top to bottom:")
for r in sorted(p.canvas.items, key=lambda r: -r.y):
    print(f"  y {(r.y + r.h) / PT:g} .. {r.y / PT:g}")
