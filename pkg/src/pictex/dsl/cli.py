"""Command-line front end: ``pictex render|replot|check``.

Exit status is 0 on success, 1 for errors in the picture source (and for
warnings under ``--strict``), 2 when a file cannot be read or written.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .lexer import ParseError
from .parser import parse
from .render import FORMATS, RenderConfig, RenderError, Renderer
from .replot import ReplotError, format_replot, load_replot
from .svg import emit_svg, fmt


def _write(out, data: bytes) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _config(args) -> RenderConfig:
    if args.config:
        return RenderConfig.load(args.config)
    return RenderConfig.from_env()


def cmd_render(args) -> int:
    cfg = _config(args)
    fmt_name = args.format or cfg.format
    src = Path(args.input)
    text = src.read_text(encoding="utf-8")
    warnings = []

    def note(msg):
        warnings.append(msg)
        print(f"warning: {msg}", file=sys.stderr)

    program = parse(text, str(src))
    result = Renderer(cfg, src.parent, note).render(program)
    if args.trace:
        for line in result.trace:
            print(line, file=sys.stderr)
    for name, records in result.saved.items():
        p = Path(name)
        (p if p.is_absolute() else src.parent / p).write_text(format_replot(records),
                                                              encoding="utf-8")
    if fmt_name == "svg":
        data = emit_svg(result.items, result.view())
    elif fmt_name == "replot":
        data = format_replot(result.trail).encode("utf-8")
    else:
        data = (" ".join(fmt(v) for v in result.bbox) + "\n").encode("ascii")
    _write(args.output, data)
    return 1 if (args.strict and warnings) else 0


def cmd_replot(args) -> int:
    """Draw a replot file's dots with the default plot symbol."""
    from ..pen import Symbol
    from ..geom import Canvas

    rf = load_replot(args.input)
    sym = Symbol.disk()
    canvas = Canvas()
    for x, y in rf.dots:
        sym.emit(canvas, x, y, kind="dot")
        canvas.account(x, y, sym.width, sym.height, sym.depth)
    _write(args.output, emit_svg(canvas.items, canvas.bbox()))
    return 0


def cmd_check(args) -> int:
    parse(Path(args.input).read_text(encoding="utf-8"), args.input)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pictex", description="Render picture-language files.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON render configuration (default: $PICTEX_CONFIG)")
    common.add_argument("--trace", action="store_true",
                        help="print one line per executed statement to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", parents=[common], help="render a picture")
    r.add_argument("input")
    r.add_argument("-o", "--output", help="output file (default: stdout)")
    r.add_argument("--format", choices=FORMATS, help="svg, replot or bbox")
    r.add_argument("--strict", action="store_true", help="treat warnings as errors")
    r.set_defaults(func=cmd_render)

    p = sub.add_parser("replot", parents=[common], help="draw a saved replot file as SVG")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_replot)

    c = sub.add_parser("check", parents=[common], help="parse only")
    c.add_argument("input")
    c.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, RenderError, ReplotError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, json.JSONDecodeError) as e:
        # bad configuration
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
