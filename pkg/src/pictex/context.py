"""The mutable drawing state threaded through every command.

A :class:`Picture` owns one canvas plus a :class:`State`.  Nested pictures
(and the helper boxes built for ticks, frames and labels) get a copy of the
state, so assignments made inside stay local, just as a TeX group would
keep them.  The total arc length and the dot sink are shared.
"""

from __future__ import annotations

import copy
import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from .axes import GraphStyle, PlotArea, normalgraphs
from .fixed import Dimen
from .geom import Box, Canvas, CoordSystem, PictureBox, Rotation, TextMetrics, dimenput, put
from .path import PathCursor
from .pen import DotSink, PenState
from .shade import ShadeState

log = logging.getLogger("pictex")


@dataclass
class Shared:
    """Render-wide values that ignore picture nesting."""

    total: int = 0  # totalarclength
    diagnostics: list = field(default_factory=list)
    sink: Optional[DotSink] = None
    trail: Optional[DotSink] = None  # every curve dot, saved or not
    on_diag: Optional[Callable[[str], None]] = None
    where: str = ""  # location prefix for diagnostics

    def diag(self, msg: str) -> None:
        msg = self.where + msg
        self.diagnostics.append(msg)
        log.info(msg)
        if self.on_diag:
            self.on_diag(msg)


@dataclass
class State:
    coords: CoordSystem = field(default_factory=CoordSystem)
    rotation: Rotation = field(default_factory=Rotation)
    pen: PenState = field(default_factory=PenState)
    cursor: PathCursor = field(default_factory=PathCursor)
    style: GraphStyle = field(default_factory=normalgraphs)
    area: PlotArea = field(default_factory=PlotArea)
    shade: ShadeState = field(default_factory=ShadeState)
    metrics: TextMetrics = field(default_factory=TextMetrics)
    curve: str = "linear"  # linear | quadratic | histogram | bars
    bars: object = None
    shade_mode: str = "linear"
    shade_rectangles: bool = False
    accounting: bool = True
    # tick and axis-label settings from the file-scope switches
    rotation_texts: tuple = ("1", "0", "0", "0")

    def copy(self) -> "State":
        new = copy.copy(self)
        for name in ("coords", "rotation", "cursor", "style", "area", "shade"):
            setattr(new, name, copy.copy(getattr(self, name)))
        new.pen = copy.copy(self.pen)
        new.pen.queue = copy.copy(self.pen.queue)
        return new


class Picture:
    def __init__(self, state: Optional[State] = None, shared: Optional[Shared] = None):
        self.state = state if state is not None else State()
        self.shared = shared if shared is not None else Shared()
        self.canvas = Canvas()

    def nested(self) -> "Picture":
        return Picture(self.state.copy(), self.shared)

    def diag(self, msg: str) -> None:
        self.shared.diag(msg)

    # measure resolution
    def x(self, m) -> Dimen:
        return self.state.coords.x(m)

    def y(self, m) -> Dimen:
        return self.state.coords.y(m)

    def point(self, mx, my) -> tuple[int, int]:
        return self.x(mx), self.y(my)

    def put(self, box: Box, x: int, y: int, markers: str = "", offset=(0, 0)):
        st = self.state
        return put(self.canvas, st.coords, st.rotation, box, x, y, markers, offset,
                   st.accounting, self.diag)

    def dimenput(self, box: Box, x: int, y: int, markers: str = "", offset=(0, 0)):
        return dimenput(self.canvas, box, x, y, markers, offset, self.state.accounting,
                        self.diag)

    def finish(self) -> PictureBox:
        return self.canvas.finalize()
