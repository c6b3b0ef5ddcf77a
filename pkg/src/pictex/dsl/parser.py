"""Recursive-descent parser for the picture language.

Statements mirror the original macros keyword for keyword, minus the
backslashes and braces.  Text is quoted; dimensions are written with a unit
(``2pt``), plain numbers are coordinates.  See ``README.md`` for the full
statement list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..fixed import DecimalSyntaxError, Dimen, parse_dimen
from .lexer import ParseError, Token, tokenize


@dataclass
class Command:
    name: str
    args: dict = field(default_factory=dict)
    line: int = 0
    col: int = 0

    def __getitem__(self, key):
        return self.args[key]

    def get(self, key, default=None):
        return self.args.get(key, default)


@dataclass
class Program:
    preamble: list
    picture: Optional[Command]
    source: str = "<input>"


SIMPLE = {
    "setlinear", "setquadratic", "sethistograms", "setsolid", "inboundscheckon",
    "inboundscheckoff", "stoprotation", "shaderectangleson", "shaderectanglesoff",
    "normalgraphs", "visibleaxes", "invisibleaxes", "ticksin", "ticksout", "gridlines",
    "nogridlines", "loggedticks", "unloggedticks", "accountingon", "accountingoff",
    "setdimensionmode", "setcoordinatemode", "dontsavelinesandcurves",
}

REGISTERS = {
    "linethickness", "plotsymbolspacing", "longticklength", "shortticklength",
    "tickstovaluesleading", "valuestolabelleading", "stackleading", "headingtoplotskip",
    "baselineskip",
}

# statements that leave marks on the canvas; not allowed before beginpicture
DRAWING = {
    "put", "multiput", "plot", "putrule", "putbar", "putrectangle", "circulararc",
    "ellipticalarc", "arrow", "betweenarrows", "vshade", "hshade", "axis", "grid",
    "plotheading", "replot", "setplotarea", "findlength", "beginpicture",
}

SIDES = ("bottom", "top", "left", "right")
TICK_FLAGS = {"in", "out", "long", "short", "andacross", "butnotacross", "logged",
              "unlogged", "unlabeled", "numbered"}


class Parser:
    def __init__(self, text: str, source: str = "<input>"):
        self.source = source
        self.toks = tokenize(text, source)
        self.i = 0

    # -- token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "eof":
            self.i += 1
        return t

    def error(self, msg: str, tok: Optional[Token] = None):
        t = tok or self.tok
        return ParseError(msg, t.line, t.col, self.source)

    def at_punct(self, ch: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == ch

    def at_word(self, *words: str) -> bool:
        return self.tok.kind == "word" and self.tok.text in words

    def expect_punct(self, ch: str) -> Token:
        if not self.at_punct(ch):
            raise self.error(f"expected {ch!r}, found {self.tok}")
        return self.advance()

    def expect_word(self, word: str) -> Token:
        if not self.at_word(word):
            raise self.error(f"expected `{word}', found {self.tok}")
        return self.advance()

    def word(self) -> str:
        if self.tok.kind != "word":
            raise self.error(f"expected a keyword, found {self.tok}")
        return self.advance().text

    def string(self) -> str:
        if self.tok.kind != "string":
            raise self.error(f"expected a quoted string, found {self.tok}")
        return self.advance().text

    def integer(self) -> int:
        t = self.tok
        if t.kind != "number" or not t.text.lstrip("+-").isdigit():
            raise self.error(f"expected an integer, found {t}")
        self.advance()
        return int(t.text)

    def number(self) -> str:
        if self.tok.kind != "number":
            raise self.error(f"expected a number, found {self.tok}")
        return self.advance().text

    def dimen(self) -> Dimen:
        t = self.tok
        if t.kind != "dimen":
            raise self.error(f"expected a dimension such as 2pt, found {t}")
        self.advance()
        try:
            return parse_dimen(t.text)
        except (DecimalSyntaxError, OverflowError) as e:
            raise self.error(str(e), t) from None

    def measure(self):
        """A coordinate (kept as text) or a dimension (resolved to sp)."""
        if self.tok.kind == "number":
            return self.advance().text
        if self.tok.kind == "dimen":
            return self.dimen()
        raise self.error(f"expected a coordinate or dimension, found {self.tok}")

    def at_measure(self) -> bool:
        return self.tok.kind in ("number", "dimen")

    # -- bracketed groups

    def angle_entries(self) -> list[str]:
        """Raw comma-separated entries of ``<...>``; empty entries are kept."""
        self.expect_punct("<")
        entries, cur = [], []
        while not self.at_punct(">"):
            t = self.tok
            if t.kind == "eof":
                raise self.error("unterminated `<'")
            self.advance()
            if t.kind == "punct" and t.text == ",":
                entries.append("".join(cur))
                cur = []
            else:
                cur.append(t.text)
        self.advance()
        entries.append("".join(cur))
        return entries

    def angle_dimens(self, count: Optional[int] = None, allow_empty=False) -> list:
        t = self.tok
        raw = self.angle_entries()
        if raw == [""] and count is None:
            return []
        if count is not None and len(raw) != count:
            raise self.error(f"expected {count} value(s) in <...>, found {len(raw)}", t)
        out = []
        for r in raw:
            if allow_empty and r in ("", "z"):
                out.append(r or None)
                continue
            try:
                out.append(parse_dimen(r))
            except (DecimalSyntaxError, OverflowError) as e:
                raise self.error(str(e), t) from None
        return out

    def opt_offset(self):
        if self.at_punct("<"):
            return tuple(self.angle_dimens(2))
        return (0, 0)

    def opt_markers(self) -> str:
        if not self.at_punct("["):
            return ""
        self.advance()
        out = []
        while not self.at_punct("]"):
            t = self.advance()
            if t.kind != "word":
                raise self.error(f"bad orientation marker {t}", t)
            out.append(t.text)
        self.advance()
        return "".join(out)

    def point(self) -> tuple:
        return (self.measure(), self.measure())

    # -- boxes

    def box(self) -> Command:
        t = self.tok
        if t.kind == "string":
            return Command("text", {"text": self.advance().text}, t.line, t.col)
        if t.kind != "word":
            raise self.error(f"expected text or a box, found {t}")
        name = t.text
        if name in ("stack", "lines", "Lines"):
            self.advance()
            align = self.opt_markers() or "c"
            if align not in ("l", "c", "r"):
                raise self.error(f"alignment must be l, c or r, not `{align}'", t)
            lead = None
            if name == "stack" and self.at_punct("<"):
                lead = self.angle_dimens(1)[0]
            self.expect_punct("(")
            lines = []
            while not self.at_punct(")"):
                lines.append(self.string())
                if self.at_punct(","):
                    self.advance()
            self.advance()
            return Command(name, {"align": align, "leading": lead, "lines": lines}, t.line, t.col)
        if name == "frame":
            self.advance()
            margin = self.angle_dimens(1)[0] if self.at_punct("<") else 0
            return Command("frame", {"margin": margin, "box": self.box()}, t.line, t.col)
        if name == "rectangle":
            self.advance()
            w = self.angle_dimens(1)[0]
            h = self.angle_dimens(1)[0]
            return Command("rectangle", {"w": w, "h": h}, t.line, t.col)
        if name == "beginpicture":
            return self.picture()
        if name == "empty":
            self.advance()
            return Command("empty", {}, t.line, t.col)
        if name == "disk":
            self.advance()
            r = self.angle_dimens(1)[0] if self.at_punct("<") else None
            return Command("disk", {"radius": r}, t.line, t.col)
        if name == "rect":
            self.advance()
            w, h = self.angle_dimens(2)
            return Command("rect", {"w": w, "h": h}, t.line, t.col)
        if name == "symbol":
            self.advance()
            return Command("symbol", {"name": self.string()}, t.line, t.col)
        raise self.error(f"expected text or a box, found {t}")

    def placed_box(self) -> dict:
        b = self.box()
        return {"box": b, "markers": self.opt_markers(), "offset": self.opt_offset()}

    def symbol_spec(self) -> dict:
        self.expect_punct("(")
        d = self.placed_box()
        self.expect_punct(")")
        return d

    # -- program structure

    def parse(self) -> Program:
        preamble = []
        picture = None
        while self.tok.kind != "eof":
            if self.at_word("beginpicture"):
                if picture is not None:
                    raise self.error("only one top-level picture per file")
                picture = self.picture()
                continue
            if picture is not None:
                raise self.error(f"unexpected {self.tok} after endpicture")
            cmd = self.statement()
            if cmd.name in DRAWING:
                raise ParseError(f"`{cmd.name}' must appear inside beginpicture ... endpicture",
                                 cmd.line, cmd.col, self.source)
            preamble.append(cmd)
        return Program(preamble, picture, self.source)

    def picture(self) -> Command:
        t = self.expect_word("beginpicture")
        body = self.block(("endpicture",))
        self.advance()
        return Command("picture", {"body": body}, t.line, t.col)

    def block(self, enders) -> list:
        body = []
        while not (self.tok.kind == "word" and self.tok.text in enders) and not (
            "}" in enders and self.at_punct("}")
        ):
            if self.tok.kind == "eof":
                raise self.error(f"missing `{enders[0]}'")
            if self.at_punct("/"):
                # a stray slash after an axis or a list is harmless in the original
                self.advance()
                continue
            body.append(self.statement())
        return body

    def statement(self) -> Command:
        t = self.tok
        if t.kind != "word":
            raise self.error(f"expected a command, found {t}")
        name = t.text
        if name == "beginpicture":
            return self.picture()
        self.advance()
        c = Command(name, {}, t.line, t.col)
        a = c.args
        if name in SIMPLE:
            return c
        if name in REGISTERS:
            if self.at_punct("="):
                self.advance()
            a["value"] = self.angle_dimens(1)[0] if self.at_punct("<") else self.dimen()
            return c
        handler = getattr(self, "_" + name, None)
        if handler is None:
            raise ParseError(f"unknown command `{name}'", t.line, t.col, self.source)
        handler(a)
        return c

    # -- statement bodies

    def _setcoordinatesystem(self, a):
        if self.at_word("units"):
            self.advance()
            a["units"] = tuple(self.angle_dimens(2))
        if self.at_word("point"):
            self.advance()
            self.expect_word("at")
            a["point"] = self.point()

    def _setplotarea(self, a):
        self.expect_word("x")
        self.expect_word("from")
        a["x1"] = self.measure()
        self.expect_word("to")
        a["x2"] = self.measure()
        self.expect_punct(",")
        self.expect_word("y")
        self.expect_word("from")
        a["y1"] = self.measure()
        self.expect_word("to")
        a["y2"] = self.measure()

    def _put(self, a):
        a.update(self.placed_box())
        self.expect_word("at")
        a["at"] = self.point()

    def _multiput(self, a):
        a.update(self.placed_box())
        self.expect_word("at")
        if self.tok.kind == "string":
            a["file"] = self.string()
            return
        a["items"] = self.multiput_items()

    def multiput_items(self) -> list:
        items = []
        while not self.at_punct("/"):
            if self.at_punct("*"):
                self.advance()
                n = self.integer()
                if n < 0:
                    raise self.error("repetition count must be non-negative")
                items.append(("by", n, self.measure(), self.measure()))
            elif self.at_measure():
                items.append(("at", self.measure(), self.measure()))
            else:
                raise self.error(f"expected a point, `*' or `/', found {self.tok}")
        self.advance()
        return items

    def _plot(self, a):
        if self.tok.kind == "string":
            a["file"] = self.string()
            return
        a["items"] = self.flat_items()

    def flat_items(self, angles: bool = False) -> list:
        """Measures and quoted labels up to the closing slash."""
        items = []
        while not self.at_punct("/"):
            if self.at_measure():
                items.append(self.measure())
            elif self.tok.kind == "string":
                items.append(("label", self.advance().text))
            elif angles and self.at_punct("<"):
                items.append(("override", tuple(self.angle_dimens(4, allow_empty=True))))
            else:
                raise self.error(f"expected a coordinate or `/', found {self.tok}")
        self.advance()
        return items

    def _putrule(self, a):
        a["offset"] = self.opt_offset()
        self.expect_word("from")
        a["from"] = self.point()
        self.expect_word("to")
        a["to"] = self.point()

    def _putbar(self, a):
        a["offset"] = self.opt_offset()
        self.expect_word("breadth")
        a["breadth"] = self.angle_dimens(1)[0]
        self.expect_word("from")
        a["from"] = self.point()
        self.expect_word("to")
        a["to"] = self.point()

    def _putrectangle(self, a):
        a["offset"] = self.opt_offset()
        self.expect_word("corners")
        self.expect_word("at")
        a["c1"] = self.point()
        self.expect_word("and")
        a["c2"] = self.point()

    def _setbars(self, a):
        a["offset"] = self.opt_offset()
        self.expect_word("breadth")
        a["breadth"] = self.angle_dimens(1)[0]
        self.expect_word("baseline")
        self.expect_word("at")
        axis = self.word()
        if axis not in ("x", "y"):
            raise self.error(f"bar baseline axis must be x or y, not `{axis}'")
        a["orientation"] = axis
        self.expect_punct("=")
        a["baseline"] = self.measure()
        for key in ("baselabels", "endlabels"):
            if self.at_word(key):
                self.advance()
                self.expect_punct("(")
                m = self.opt_markers()
                o = self.opt_offset()
                self.expect_punct(")")
                a[key] = (m, o)

    def _circulararc(self, a):
        a["ratio"] = ("1", "1")
        self._arc_tail(a)

    def _ellipticalarc(self, a):
        self.expect_word("axes")
        self.expect_word("ratio")
        p = self.number()
        self.expect_punct(":")
        a["ratio"] = (p, self.number())
        self._arc_tail(a)

    def _arc_tail(self, a):
        a["degrees"] = self.number()
        self.expect_word("degrees")
        self.expect_word("from")
        a["from"] = self.point()
        self.expect_word("center")
        self.expect_word("at")
        a["center"] = self.point()

    def _arrow(self, a):
        a["head"] = self.angle_dimens(1)[0]
        self.expect_punct("[")
        t1 = self.number()
        self.expect_punct(",")
        t2 = self.number()
        self.expect_punct("]")
        a["shape"] = (t1, t2)
        a["offset"] = self.opt_offset()
        self.expect_word("from")
        a["from"] = self.point()
        self.expect_word("to")
        a["to"] = self.point()

    def _betweenarrows(self, a):
        a.update(self.placed_box())
        self.expect_word("from")
        a["from"] = self.point()
        self.expect_word("to")
        a["to"] = self.point()

    def _vshade(self, a):
        a["items"] = self.flat_items(angles=True)

    _hshade = _vshade

    def _setshadegrid(self, a):
        if self.at_word("span"):
            self.advance()
            a["span"] = self.angle_dimens(1)[0]
        if self.at_word("point"):
            self.advance()
            self.expect_word("at")
            a["point"] = self.point()

    def _setshadesymbol(self, a):
        a["overrides"] = (tuple(self.angle_dimens(4, allow_empty=True))
                          if self.at_punct("<") else (None,) * 4)
        a.update(self.symbol_spec())

    def _setplotsymbol(self, a):
        a.update(self.symbol_spec())

    def _setdashpattern(self, a):
        a["entries"] = self.angle_dimens()

    def _setdots(self, a):
        a["length"] = self.angle_dimens(1)[0] if self.at_punct("<") else None

    _setdashes = _setdots

    def _setdotsnear(self, a):
        a["length"] = self.angle_dimens(1)[0]
        self.expect_word("for")
        a["span"] = self.angle_dimens(1)[0]

    _setdashesnear = _setdotsnear

    def _findlength(self, a):
        self.expect_punct("{")
        a["body"] = self.block(("}",))
        self.advance()

    def _startrotation(self, a):
        if self.at_word("by"):
            self.advance()
            a["by"] = (self.number(), self.number())
        if self.at_word("about"):
            self.advance()
            a["about"] = self.point()

    def _savelinesandcurves(self, a):
        self.expect_word("on")
        a["file"] = self.string()

    def _writesavefile(self, a):
        a["text"] = self.string()

    def _replot(self, a):
        a["file"] = self.string()

    def _grid(self, a):
        for key in ("columns", "rows"):
            t = self.tok
            a[key] = self.integer()
            if a[key] < 1:
                raise self.error("grid needs at least one column and one row", t)

    def _plotheading(self, a):
        a["box"] = self.box()

    def _axis(self, a):
        clauses = []
        a["clauses"] = clauses
        ticks = False
        while True:
            t = self.tok
            if self.at_punct("/"):
                self.advance()
                return
            if t.kind == "eof":
                raise self.error("missing `/' at the end of the axis")
            if t.kind != "word":
                raise self.error(f"Unrecognized keyword `{t.text}'")
            k = t.text
            self.advance()
            if not ticks:
                if k in SIDES or k in ("visible", "invisible"):
                    clauses.append((k,))
                elif k == "shiftedto":
                    self.word()
                    self.expect_punct("=")
                    clauses.append((k, self.measure()))
                elif k == "label":
                    clauses.append((k, self.box()))
                elif k == "ticks":
                    ticks = True
                    clauses.append((k,))
                else:
                    raise ParseError(f"Unrecognized keyword `{k}'", t.line, t.col, self.source)
                continue
            if k in TICK_FLAGS:
                clauses.append((k,))
            elif k in ("length", "width"):
                clauses.append((k, self.angle_dimens(1)[0]))
            elif k == "quantity":
                clauses.append((k, self.integer()))
            elif k == "at":
                vals = []
                while not self.at_punct("/"):
                    vals.append(self.number())
                self.advance()
                clauses.append((k, vals))
            elif k == "from":
                f = self.number()
                self.expect_word("to")
                to = self.number()
                self.expect_word("by")
                clauses.append((k, f, to, self.number()))
            elif k == "withvalues":
                vals = []
                while not self.at_punct("/"):
                    v = self.advance()
                    if v.kind == "eof":
                        raise self.error("missing `/' after withvalues")
                    vals.append(v.text)
                self.advance()
                clauses.append((k, vals))
            else:
                raise ParseError(f"Unrecognized keyword `{k}'", t.line, t.col, self.source)


def parse(text: str, source: str = "<input>") -> Program:
    return Parser(text, source).parse()


def parse_points(text: str, source: str = "<data>") -> list:
    """A point stream: measures and labels, optionally closed by ``/``."""
    p = Parser(text, source)
    items = []
    while p.tok.kind != "eof" and not p.at_punct("/"):
        if p.at_measure():
            items.append(p.measure())
        elif p.tok.kind == "string":
            items.append(("label", p.advance().text))
        elif p.at_punct("*"):
            p.advance()
            items.append(("by", p.integer(), p.measure(), p.measure()))
        else:
            raise p.error(f"expected a coordinate, found {p.tok}")
    return items
