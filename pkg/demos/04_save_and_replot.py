"""Save a curve's dots to a replot file and draw them again without
recomputing the curve.

    python3 demos/04_save_and_replot.py [output-directory]
"""

import sys
from pathlib import Path

from pictex.dsl import emit_svg, load_replot, render_text, save_replot

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-output")
out_dir.mkdir(parents=True, exist_ok=True)

first = render_text(r"""
beginpicture
  setcoordinatesystem units <20pt,20pt>
  savelinesandcurves on "spiral.rpl"
  writesavefile "a few arcs"
  circulararc 270 degrees from 3 0 center at 0 0
  dontsavelinesandcurves
endpicture
""", base_dir=out_dir)
for name, records in first.saved.items():
    save_replot(out_dir / name, records)

saved = load_replot(out_dir / "spiral.rpl")
print(f"saved {len(saved.dots)} dots, comments {saved.comments}")

again = render_text('beginpicture replot "spiral.rpl" endpicture', base_dir=out_dir)
same = [(i.x, i.y) for i in first.items] == [(i.x, i.y) for i in again.items]
print("replayed picture matches the original:", same)
(out_dir / "spiral.svg").write_bytes(emit_svg(again.items, again.view()))
print("wrote", out_dir / "spiral.svg")
