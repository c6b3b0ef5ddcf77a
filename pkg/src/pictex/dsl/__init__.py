"""The picture language: parser, interpreter and back ends."""

from .lexer import ParseError
from .parser import Program, parse
from .render import RenderConfig, RenderError, RenderResult, Renderer, render_file, render_text
from .replot import load_replot, parse_replot, save_replot
from .svg import emit_svg

__all__ = [
    "ParseError", "Program", "parse", "RenderConfig", "RenderError", "RenderResult",
    "Renderer", "render_file", "render_text", "load_replot", "parse_replot", "save_replot",
    "emit_svg",
]
