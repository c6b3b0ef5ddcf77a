"""Draw a small graph from picture-language source and write it as SVG.

    python3 demos/02_graph.py [output-directory]
"""

import sys
from pathlib import Path

from pictex.dsl import emit_svg, render_text

SOURCE = r"""
beginpicture
  setcoordinatesystem units <30pt,12pt>
  setplotarea x from 0 to 4, y from 0 to 8
  axis bottom label "x" ticks numbered from 0 to 4 by 1 /
  axis left ticks numbered from 0 to 8 by 2 /
  plotheading "y = x squared / 2"
  setquadratic
  plot 0 0  1 .5  2 2  3 4.5  4 8 /
  setshadegrid span <3pt>
  vshade 0 0 0  2 0 2  4 0 8 /
  setlinear
  setdashes <4pt>
  plot 0 0 4 8 /
  setsolid
  put "area" [l] at 3.1 2
endpicture
"""

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-output")
out_dir.mkdir(parents=True, exist_ok=True)
notes = []
result = render_text(SOURCE, on_diag=notes.append)
svg = out_dir / "graph.svg"
svg.write_bytes(emit_svg(result.items, result.view()))
x0, y0, x1, y1 = (v / 65536 for v in result.bbox)
print(f"wrote {svg}: {len(result.items)} marks, bounding box {x0:.2f} {y0:.2f} {x1:.2f} {y1:.2f} pt")
for n in notes:
    print("note:", n)
