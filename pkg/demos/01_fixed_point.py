"""Why the numbers come out the way they do.

Every length is an integer count of scaled points (65536sp = 1pt) and every
operation truncates the way the original macros do.  This walk-through prints
a few results next to their floating-point counterparts.
"""

import math

from pictex.fixed import UNITY, divide, format_scaled, log10_of, parse_dimen, pythag, sincos


def pt(sp):
    return f"{sp / UNITY:.5f}pt"


print("Reading lengths")
for text in ("1in", ".4pt", "2.54cm", "1bp"):
    print(f"  {text:>7} = {parse_dimen(text):>9}sp")

print("\nLong division, a/b as a length")
for a, b in (("1pt", "3pt"), ("100pt", "7pt"), ("1pt", "300pt")):
    q = divide(parse_dimen(a), parse_dimen(b))
    exact = parse_dimen(a) / parse_dimen(b)
    print(f"  {a}/{b}: {pt(q)} (float says {exact:.5f})")

print("\nHypotenuse by three Newton steps")
for a, b in ((3, 4), (1, 1), (100, 0.5)):
    h = pythag(parse_dimen(f"{a}pt"), parse_dimen(f"{b}pt"))
    print(f"  ({a}, {b}) -> {pt(h)}  vs {math.hypot(a, b):.5f}")

print("\nThe series used for arcs: 32 sin(d/32), 32 cos(d/32)")
d = parse_dimen("4.18879pt")
s, c = sincos(d)
print(f"  d = 4.18879pt -> {pt(s)}, {pt(c)}")
print(f"  true values   -> {32 * math.sin(4.18879 / 32):.5f}pt, {32 * math.cos(4.18879 / 32):.5f}pt")
print("  (arcs use precomputed constants for whole 7.5 degree half-steps)")

print("\nCommon logarithms for logged axes")
for x in ("2", "30", "0.05", "7.5"):
    print(f"  log10({x}) = {log10_of(x)}  vs {math.log10(float(x)):.5f}")

print("\nPrinting a length back")
print(f"  {int(parse_dimen('.4pt'))}sp prints as {format_scaled(parse_dimen('.4pt'))}pt")
