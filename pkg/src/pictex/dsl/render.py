"""The interpreter: walks a parsed program and drives the drawing modules."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Optional

from ..axes import Axis, grid, init_inbounds, normalgraphs, plotheading, setplotarea
from ..context import Picture, Shared, State
from ..fixed import UNITY, Dimen, parse_decimal, parse_dimen
from ..geom import (Box, EmptyBox, PictureBox, Rotation, TextMetrics, layout_text_block,
                    place, resolve, text_box)
from .. import path as P
from ..pen import (DotSink, Symbol, set_dash_pattern, set_dashes, set_dashes_near, set_dots,
                   set_dots_near, symbol_from_box)
from ..shade import band_units, lshade, qshade, set_shade_grid, set_shade_symbol, start_shade
from .lexer import ParseError
from .parser import Command, Program, parse, parse_points
from .replot import ReplotError, load_replot

FORMATS = ("svg", "replot", "bbox")


class RenderError(ValueError):
    """A runtime failure, tagged with the statement that caused it."""

    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = "<input>"):
        self.message, self.line, self.col, self.source = message, line, col, source
        super().__init__(f"{source}:{line}:{col}: {message}" if line else message)


# ------------------------------------------------------------------ config


def _symbol_from_spec(name: str, spec, metrics: TextMetrics) -> Symbol:
    if isinstance(spec, str):
        return Symbol.glyph(spec, metrics)
    if not isinstance(spec, dict) or len(spec) != 1:
        raise ValueError(f"symbol {name!r}: expected one of disk, rect or glyph")
    (kind, v), = spec.items()
    if kind == "disk":
        return Symbol.disk(parse_dimen(v))
    if kind == "rect":
        w, h = v
        return Symbol.rect(parse_dimen(w), parse_dimen(h))
    if kind == "glyph":
        return Symbol.glyph(str(v), metrics)
    raise ValueError(f"symbol {name!r}: unknown shape {kind!r}")


def default_symbols(metrics: TextMetrics = TextMetrics()) -> dict:
    return {
        "period": Symbol.disk(),
        "bullet": Symbol.disk(parse_dimen("1.5pt")),
        "square": Symbol.rect(2 * UNITY, 2 * UNITY),
        "plus": Symbol.glyph("+", metrics),
        "times": Symbol.glyph("×", metrics),
        "star": Symbol.glyph("*", metrics),
    }


@dataclass
class RenderConfig:
    baselineskip: int = 12 * UNITY
    em: int = 10 * UNITY
    format: str = "svg"
    symbols: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.baselineskip <= 0 or self.em <= 0:
            raise ValueError("baselineskip and em must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")

    @property
    def metrics(self) -> TextMetrics:
        return TextMetrics(self.em, self.baselineskip)

    def symbol(self, name: str) -> Symbol:
        table = default_symbols(self.metrics)
        table.update(self.symbols)
        if name not in table:
            raise ValueError(f"unknown symbol {name!r}; known: {', '.join(sorted(table))}")
        return table[name]

    @classmethod
    def from_mapping(cls, data: dict) -> "RenderConfig":
        unknown = set(data) - {"baselineskip", "em", "format", "symbols"}
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        cfg = cls()
        kw = {}
        for key in ("baselineskip", "em"):
            if key in data:
                kw[key] = parse_dimen(str(data[key]))
        if "format" in data:
            kw["format"] = data["format"]
        cfg = replace(cfg, **kw)
        m = cfg.metrics
        cfg.symbols = {k: _symbol_from_spec(k, v, m) for k, v in data.get("symbols", {}).items()}
        return cfg

    @classmethod
    def load(cls, path) -> "RenderConfig":
        with open(path, encoding="utf-8") as f:
            return cls.from_mapping(json.load(f))

    @classmethod
    def from_env(cls) -> "RenderConfig":
        p = os.environ.get("PICTEX_CONFIG")
        return cls.load(p) if p else cls()


# ------------------------------------------------------------------ result


@dataclass
class RenderResult:
    box: PictureBox
    areas: list  # plot areas placed on the top-level canvas, (x0, y0, x1, y1)
    diagnostics: list
    trail: list  # every curve dot and comment, for the replot back end
    saved: dict  # file name -> records written by savelinesandcurves
    lengths: list  # findlength results
    trace: list

    @property
    def items(self) -> tuple:
        return self.box.items

    @property
    def bbox(self) -> tuple[int, int, int, int]:
        b = self.box
        return b.xleft, b.ybot, b.xright, b.ytop

    def view(self) -> tuple[int, int, int, int]:
        """The picture's bounding box united with the plot areas."""
        x0, y0, x1, y1 = self.bbox
        if not self.box.items and not self.areas and (x0, y0, x1, y1) == (0, 0, 0, 0):
            return 0, 0, 0, 0
        for a in self.areas:
            x0, y0 = min(x0, a[0]), min(y0, a[1])
            x1, y1 = max(x1, a[2]), max(y1, a[3])
        return x0, y0, x1, y1


# ------------------------------------------------------------------ interpreter


def _override(v):
    if v is None or v == "z":
        return v
    return f"{int(v)}sp"


def _pairs(measures: list, what: str) -> list:
    if len(measures) % 2:
        raise ValueError(f"{what}: odd number of coordinates")
    return [(measures[i], measures[i + 1]) for i in range(0, len(measures), 2)]


class Renderer:
    """Runs one program.  ``base_dir`` anchors data, replot and save files."""

    def __init__(self, config: Optional[RenderConfig] = None, base_dir=None,
                 on_diag: Optional[Callable[[str], None]] = None):
        self.config = config or RenderConfig()
        self.base_dir = Path(base_dir) if base_dir is not None else Path.cwd()
        self.on_diag = on_diag
        self.source = "<input>"

    # -- entry point

    def render(self, program: Program) -> RenderResult:
        self.source = program.source
        self.trail = DotSink()
        self.shared = Shared(trail=self.trail, on_diag=self.on_diag)
        self.saved: dict = {}
        self.lengths: list = []
        self.trace: list = []
        self.areas: list = []
        cfg = self.config
        state = State(style=normalgraphs(cfg.baselineskip), metrics=cfg.metrics)
        top = Picture(state, self.shared)
        self.run(top, program.preamble)
        if program.picture is None:
            box = top.finish()
        else:
            self.root = top.nested()
            self.run(self.root, program.picture["body"])
            box = self.root.finish()
        return RenderResult(box, self.areas, self.shared.diagnostics, self.trail.records,
                            self.saved, self.lengths, self.trace)

    def run(self, pic: Picture, body: list) -> None:
        for cmd in body:
            self.execute(pic, cmd)

    def execute(self, pic: Picture, cmd: Command) -> None:
        where = f"{self.source}:{cmd.line}:{cmd.col}: "
        self.shared.where = where
        before = (len(pic.canvas.items), len(self.shared.diagnostics))
        try:
            getattr(self, "do_" + cmd.name)(pic, cmd)
        except (RenderError, ParseError):
            raise
        except ReplotError as e:
            raise RenderError(str(e), cmd.line, cmd.col, self.source) from None
        except (ValueError, ArithmeticError, KeyError) as e:
            raise RenderError(f"{cmd.name}: {e}", cmd.line, cmd.col, self.source) from None
        finally:
            self.shared.where = ""
        added = len(pic.canvas.items) - before[0]
        notes = len(self.shared.diagnostics) - before[1]
        line = f"{where}{cmd.name}: +{added} items"
        if notes:
            line += f", {notes} diagnostic(s)"
        self.trace.append(line)

    # -- helpers

    def file(self, name: str) -> Path:
        p = Path(name)
        return p if p.is_absolute() else self.base_dir / p

    def read_points(self, name: str) -> list:
        path = self.file(name)
        with open(path, encoding="utf-8") as f:
            return parse_points(f.read(), str(path))

    def box(self, pic: Picture, c: Command) -> Box:
        st = pic.state
        m = st.metrics
        n = c.name
        if n == "text":
            return text_box(c["text"], m)
        if n == "stack":
            lead = c["leading"] if c["leading"] is not None else st.style.stackleading
            return layout_text_block(c["lines"], c["align"], lead, "bottom", m)
        if n in ("lines", "Lines"):
            anchor = "top" if n == "Lines" else "bottom"
            return layout_text_block(c["lines"], c["align"], 0, anchor, m, baseline_glue=True)
        if n == "frame":
            return P.frame(pic, c["margin"], self.box(pic, c["box"]))
        if n == "rectangle":
            return P.rectangle(pic, c["w"], c["h"])
        if n == "picture":
            inner = pic.nested()
            self.run(inner, c["body"])
            return inner.finish()
        if n == "empty":
            return EmptyBox()
        if n == "disk":
            return Symbol.disk(c["radius"]) if c["radius"] is not None else Symbol.disk()
        if n == "rect":
            return Symbol.rect(c["w"], c["h"])
        if n == "symbol":
            return self.config.symbol(c["name"])
        raise ValueError(f"unknown box {n!r}")

    def symbol(self, pic: Picture, cmd: Command) -> Symbol:
        sym = symbol_from_box(self.box(pic, cmd["box"]))
        return sym.anchored(cmd["markers"], cmd["offset"], pic.diag)

    # -- pictures and placement

    def do_picture(self, pic, c):
        # a bare nested picture lands at its own origin, unaccounted
        b = self.box(pic, c)
        b.emit(pic.canvas, b.xleft, b.shift)

    def do_put(self, pic, c):
        b = self.box(pic, c["box"])
        pic.put(b, *pic.point(*c["at"]), c["markers"], c["offset"])

    def do_multiput(self, pic, c):
        b = self.box(pic, c["box"])
        if "file" in c.args:
            items, flat = [], []
            for it in self.read_points(c["file"]):
                if isinstance(it, tuple) and it[0] == "by":
                    items += [("at", *p) for p in _pairs(flat, "multiput")]
                    flat = []
                    items.append(it)
                elif isinstance(it, tuple):
                    raise ValueError("multiput data may not contain labels")
                else:
                    flat.append(it)
            items += [("at", *p) for p in _pairs(flat, "multiput")]
        else:
            items = c["items"]
        st = pic.state
        pos = None
        for it in items:
            if it[0] == "at":
                pos = pic.put(b, *pic.point(it[1], it[2]), c["markers"], c["offset"])
                continue
            _, n, dx, dy = it
            if pos is None:
                raise ValueError("`*' repetition needs a preceding point")
            ddx, ddy = st.rotation.only(*pic.point(dx, dy))
            x, y = pos
            for _ in range(n):
                x += ddx
                y += ddy
                place(pic.canvas, b, x, y, c["markers"], account=False)
            pos = (x, y)
            if st.accounting:
                pic.canvas.account(x, y, b.width, b.height, b.depth)

    def do_setplotarea(self, pic, c):
        a = setplotarea(pic, c["x1"], c["x2"], c["y1"], c["y2"])
        if pic is getattr(self, "root", None):
            self.areas.append((a.left, a.bottom, a.right, a.top))

    # -- coordinate system and rotation

    def do_setcoordinatesystem(self, pic, c):
        co = pic.state.coords
        if "units" in c.args:
            co.xunit, co.yunit = c["units"]
        if co.mode == "coordinate":
            if "point" in c.args:
                px, py = c["point"]
                co.x(px), co.y(py)  # type check: coordinates, not lengths
                co.xref, co.yref = px, py
            co.refresh_origin()
            init_inbounds(pic)
        elif "point" in c.args:
            co.xorigin, co.yorigin = pic.point(*c["point"])

    def do_setdimensionmode(self, pic, c):
        pic.state.coords.mode = "dimension"

    def do_setcoordinatemode(self, pic, c):
        pic.state.coords.mode = "coordinate"

    def do_startrotation(self, pic, c):
        st = pic.state
        cos, sin, px, py = st.rotation_texts
        if "by" in c.args:
            cos, sin = c["by"]
        old = st.rotation
        co = st.coords
        if co.mode == "coordinate":
            if "about" in c.args:
                px, py = c["about"]
            xp = resolve(px, co.xunit, "coordinate")
            yp = resolve(py, co.yunit, "coordinate")
        elif "about" in c.args:
            xp, yp = pic.point(*c["about"])
        else:
            xp, yp = old.xpivot, old.ypivot
        st.rotation_texts = (cos, sin, px, py)
        st.rotation = Rotation(True, parse_decimal(cos), parse_decimal(sin), xp, yp)

    def do_stoprotation(self, pic, c):
        r = pic.state.rotation
        pic.state.rotation = Rotation(False, r.cos, r.sin, r.xpivot, r.ypivot)

    # -- pen state

    def do_setplotsymbol(self, pic, c):
        pic.state.pen.symbol = self.symbol(pic, c)

    def do_setdashpattern(self, pic, c):
        pic.state.pen.set_pattern(set_dash_pattern(c["entries"]))

    def do_setdots(self, pic, c):
        pen = pic.state.pen
        gap = c["length"] if c["length"] is not None else 5 * UNITY
        pen.set_pattern(set_dots(gap, pen.spacing))

    def do_setdashes(self, pic, c):
        ln = c["length"] if c["length"] is not None else 5 * UNITY
        pic.state.pen.set_pattern(set_dashes(ln))

    def do_setdotsnear(self, pic, c):
        pen = pic.state.pen
        pen.set_pattern(set_dots_near(c["length"], c["span"], pen.spacing))

    def do_setdashesnear(self, pic, c):
        pic.state.pen.set_pattern(set_dashes_near(c["length"], c["span"]))

    def do_setsolid(self, pic, c):
        pic.state.pen.set_solid()

    def do_inboundscheckon(self, pic, c):
        pic.state.pen.inbounds = True
        init_inbounds(pic)

    def do_inboundscheckoff(self, pic, c):
        pic.state.pen.inbounds = False

    def do_accountingon(self, pic, c):
        pic.state.accounting = True

    def do_accountingoff(self, pic, c):
        pic.state.accounting = False

    def do_setlinear(self, pic, c):
        pic.state.curve = pic.state.shade_mode = "linear"

    def do_setquadratic(self, pic, c):
        pic.state.curve = pic.state.shade_mode = "quadratic"

    def do_sethistograms(self, pic, c):
        pic.state.curve = "histogram"

    def do_setbars(self, pic, c):
        st = pic.state
        st.curve = "bars"
        st.bars = P.BarsConfig(c["offset"], c["breadth"], c["orientation"], c["baseline"],
                               c.get("baselabels"), c.get("endlabels"))

    # -- registers and graph style

    def _register(self, pic, c):
        st, v = pic.state, c["value"]
        name = c.name
        if name == "plotsymbolspacing":
            if v <= 0:
                raise ValueError("plotsymbolspacing must be positive")
            st.pen.spacing = v
        elif name == "baselineskip":
            st.style.baselineskip = v
            st.metrics = replace(st.metrics, baselineskip=v)
        else:
            setattr(st.style, name, v)

    do_linethickness = do_plotsymbolspacing = do_longticklength = _register
    do_shortticklength = do_tickstovaluesleading = do_valuestolabelleading = _register
    do_stackleading = do_headingtoplotskip = do_baselineskip = _register

    def do_normalgraphs(self, pic, c):
        pic.state.style = normalgraphs(pic.state.style.baselineskip)

    def _style(attr, value):
        def handler(self, pic, c):
            setattr(pic.state.style, attr, value)
        return handler

    do_visibleaxes = _style("axes_visible", True)
    do_invisibleaxes = _style("axes_visible", False)
    do_ticksin = _style("ticks_sign", "-")
    do_ticksout = _style("ticks_sign", "+")
    do_gridlines = _style("gridlines", True)
    do_nogridlines = _style("gridlines", False)
    do_loggedticks = _style("logged", True)
    do_unloggedticks = _style("logged", False)
    del _style

    # -- curves

    def do_plot(self, pic, c):
        items = self.read_points(c["file"]) if "file" in c.args else c["items"]
        st = pic.state
        if st.curve == "bars":
            self._bars(pic, st.bars, items)
            return
        if any(isinstance(i, tuple) for i in items):
            raise ValueError("labels are only allowed when plotting bars")
        pts = [pic.point(x, y) for x, y in _pairs(items, "plot")]
        if st.curve == "histogram":
            P.histogram(pic, pts)
        else:
            P.plot_curve(pic, pts, st.curve)

    def _bars(self, pic, cfg: P.BarsConfig, items: list) -> None:
        it = iter(items)

        def label(which):
            v = next(it, None)
            if not (isinstance(v, tuple) and v[0] == "label"):
                raise ValueError(f"bar {which} label: expected a quoted string")
            return v[1]

        for x in it:
            y = next(it, None)
            if isinstance(x, tuple) or y is None or isinstance(y, tuple):
                raise ValueError("bars: expected a coordinate pair")
            base = (x, cfg.baseline) if cfg.orientation == "y" else (cfg.baseline, y)
            bx, by = pic.point(*base)
            ex, ey = pic.point(x, y)
            P.putbar(pic, cfg.offset, cfg.breadth, bx, by, ex, ey)
            m = pic.state.metrics
            if cfg.base_labels is not None:
                pic.put(text_box(label("base"), m), bx, by, *cfg.base_labels)
            if cfg.end_labels is not None:
                pic.put(text_box(label("end"), m), ex, ey, *cfg.end_labels)

    def do_putrule(self, pic, c):
        P.putrule(pic, c["offset"], *pic.point(*c["from"]), *pic.point(*c["to"]))

    def do_putbar(self, pic, c):
        P.putbar(pic, c["offset"], c["breadth"], *pic.point(*c["from"]), *pic.point(*c["to"]))

    def do_putrectangle(self, pic, c):
        P.putrectangle(pic, c["offset"], pic.point(*c["c1"]), pic.point(*c["c2"]))

    def do_circulararc(self, pic, c):
        P.elliptical_arc(pic, *c["ratio"], c["degrees"], *pic.point(*c["from"]),
                         *pic.point(*c["center"]))

    do_ellipticalarc = do_circulararc

    def do_arrow(self, pic, c):
        P.arrow(pic, c["head"], *c["shape"], c["offset"], *pic.point(*c["from"]),
                *pic.point(*c["to"]))

    def do_betweenarrows(self, pic, c):
        b = self.box(pic, c["box"])
        P.betweenarrows(pic, b, c["markers"], c["offset"], *pic.point(*c["from"]),
                        *pic.point(*c["to"]))

    # -- shading

    def do_vshade(self, pic, c, horizontal=False):
        st = pic.state
        mode = st.coords.mode
        au, bu = band_units(pic, horizontal)
        items = list(c["items"])

        def triple(k):
            vals = items[k:k + 3]
            if len(vals) < 3 or any(isinstance(v, tuple) for v in vals):
                raise ValueError("shading expects triples of coordinates")
            a, lo, hi = vals
            return resolve(a, au, mode), resolve(lo, bu, mode), resolve(hi, bu, mode)

        start_shade(pic, horizontal, *triple(0))
        k = 3
        quad = st.shade_mode == "quadratic"
        while k < len(items):
            ov = None
            if isinstance(items[k], tuple) and items[k][0] == "override":
                ov = tuple(_override(v) for v in items[k][1])
                k += 1
            if quad:
                m, e = triple(k), triple(k + 3)
                qshade(pic, *m, *e, ov)
                k += 6
            else:
                lshade(pic, *triple(k), ov)
                k += 3

    def do_hshade(self, pic, c):
        self.do_vshade(pic, c, horizontal=True)

    def do_setshadegrid(self, pic, c):
        set_shade_grid(pic, c.get("span"), c.get("point"))

    def do_setshadesymbol(self, pic, c):
        ov = tuple(_override(v) for v in c["overrides"])
        pic.state.shade.symbol = set_shade_symbol(self.symbol(pic, c), ov)

    def do_shaderectangleson(self, pic, c):
        pic.state.shade_rectangles = True

    def do_shaderectanglesoff(self, pic, c):
        pic.state.shade_rectangles = False

    # -- axes

    def do_axis(self, pic, c):
        if not pic.state.area.defined:
            pic.diag("axis drawn before setplotarea; using the default 1pt area")
        ax = Axis(pic)
        simple = {
            "visible": lambda: ax.set_visible(True),
            "invisible": lambda: ax.set_visible(False),
            "ticks": ax.ticks,
            "in": lambda: ax.tick_inout(True),
            "out": lambda: ax.tick_inout(False),
            "long": ax.tick_long,
            "short": ax.tick_short,
            "andacross": lambda: ax.tick_across(True),
            "butnotacross": lambda: ax.tick_across(False),
            "logged": lambda: ax.tick_logged(True),
            "unlogged": lambda: ax.tick_logged(False),
            "unlabeled": ax.tick_unlabeled,
            "numbered": ax.tick_numbered,
        }
        for clause in c["clauses"]:
            k = clause[0]
            if k in ("bottom", "top", "left", "right"):
                ax.side(k)
            elif k in simple:
                simple[k]()
            elif k == "shiftedto":
                ax.shiftedto(clause[1])
            elif k == "label":
                ax.set_label(self.box(pic, clause[1]))
            elif k == "length":
                ax.tick_length(clause[1])
            elif k == "width":
                ax.tick_width(clause[1])
            elif k == "quantity":
                ax.quantity(clause[1])
            elif k == "at":
                ax.at(clause[1])
            elif k == "from":
                ax.from_to_by(*clause[1:])
            elif k == "withvalues":
                ax.tick_withvalues(clause[1])
            else:  # pragma: no cover - the parser rejects these
                raise ValueError(f"Unrecognized keyword `{k}'")
        ax.finish()

    def do_grid(self, pic, c):
        grid(pic, c["columns"], c["rows"])

    def do_plotheading(self, pic, c):
        plotheading(pic, self.box(pic, c["box"]))

    # -- arc length and persistence

    def do_findlength(self, pic, c):
        inner = pic.nested()
        pen = inner.state.pen
        pen.set_pattern(set_dash_pattern([0, 0x3FFFFFFF]))
        pen.symbol = Symbol.empty()
        pen.saving = False
        sh = self.shared
        trail, sh.trail = sh.trail, None
        try:
            self.run(inner, c["body"])
        finally:
            sh.trail = trail
        self.lengths.append(Dimen(sh.total))
        self.trace.append(f"{self.source}:{c.line}:{c.col}: totalarclength = {Dimen(sh.total)}")

    def do_savelinesandcurves(self, pic, c):
        sink = DotSink()
        self.saved[c["file"]] = sink.records
        self.shared.sink = sink
        pic.state.pen.saving = True

    def do_dontsavelinesandcurves(self, pic, c):
        pic.state.pen.saving = False

    def do_writesavefile(self, pic, c):
        text = c["text"]
        if self.shared.sink is None:
            pic.diag(f"writesavefile with no open save file: {text}")
        else:
            self.shared.sink.records.append(text)
        self.trail.records.append(text)

    def do_replot(self, pic, c):
        path = self.file(c["file"])
        rf = load_replot(path)
        sym = pic.state.pen.symbol
        for x, y in rf.dots:
            sym.emit(pic.canvas, x, y, kind="dot")
            if self.shared.trail is not None:
                self.shared.trail.write(x, y)


def render_text(text: str, config: Optional[RenderConfig] = None, source: str = "<input>",
                base_dir=None, on_diag=None) -> RenderResult:
    return Renderer(config, base_dir, on_diag).render(parse(text, source))


def render_file(path, config: Optional[RenderConfig] = None, on_diag=None) -> RenderResult:
    path = Path(path)
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return render_text(text, config, str(path), path.parent, on_diag)
