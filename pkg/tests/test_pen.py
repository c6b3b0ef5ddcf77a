import pytest

from conftest import PT, pt
from pictex.fixed import parse_dimen
from pictex.geom import Canvas
from pictex.pen import (
    INVISIBLE, PenState, Symbol, TWENTYFOUR_IN, emit_dot, set_dash_pattern, set_dashes,
    set_dashes_near, set_dots, set_dots_near, symbol_from_box,
)
from pictex.geom import text_box

SPACING = parse_dimen(".4pt")


def test_dash_pattern_pairs():
    p = set_dash_pattern([2 * PT, 3 * PT])
    assert p.segments == [(2 * PT, 3 * PT)] and p.leader == 5 * PT
    p = set_dash_pattern([PT, 2 * PT, 3 * PT, 4 * PT])
    assert p.segments == [(PT, 2 * PT), (3 * PT, 4 * PT)] and p.leader == 10 * PT


@pytest.mark.parametrize("entries", [[], [0, 0]])
def test_empty_pattern_is_invisible(entries):
    p = set_dash_pattern(entries)
    assert p is INVISIBLE and p.leader == TWENTYFOUR_IN


def test_negative_entry_rejected():
    with pytest.raises(ValueError):
        set_dash_pattern([PT, -PT])


def test_set_dots_and_dashes():
    assert set_dots(5 * PT).entries == (SPACING, 5 * PT - SPACING)
    assert set_dots(SPACING).entries == (SPACING, 0)
    assert set_dashes(5 * PT).entries == (5 * PT, 5 * PT)


def test_dashes_near():
    # 30/5 = 6 dashes, bumped to 7 so the span starts and ends pen-down
    assert set_dashes_near(5 * PT, 30 * PT).entries[0] == 30 * PT // 7
    assert abs(set_dashes_near(5 * PT, 30 * PT).entries[0] - pt(30 / 7)) <= 1
    assert set_dashes_near(10 * PT, 30 * PT).entries[0] == 10 * PT


def test_dots_near_clamps():
    p = set_dots_near(5 * PT, PT)
    assert p.leader == PT - parse_dimen(".05pt")


def dashed(entries, spacing=SPACING):
    pen = PenState(spacing=spacing)
    pen.set_pattern(set_dash_pattern(entries))
    pen.reset_phase()
    return pen


def test_advance_plain_decrement():
    pen = dashed([PT, 4 * PT])
    assert pen.advance_dashing(0) == 0
    assert pen.down == PT - SPACING


def test_advance_exact_exhaustion():
    pen = dashed([SPACING, 5 * PT - SPACING])
    carry = pen.advance_dashing(0)
    assert carry == 5 * PT - SPACING
    assert pen.down == SPACING


def test_advance_negative_carry():
    pen = dashed([pt(0.3), 2 * PT])
    pen.down = parse_dimen(".3pt")
    carry = pen.advance_dashing(0)
    assert carry == parse_dimen(".3pt") - SPACING + 2 * PT


def test_solid_pen_never_skips():
    pen = PenState()
    assert pen.advance_dashing(123) == 123


def test_emit_dot_clip():
    c = Canvas()
    pen = PenState()
    assert emit_dot(c, pen, 0, 0, (0, 0))
    assert len(c.items) == 1
    pen.inbounds = True
    pen.check = (0, 10 * PT, 0, 10 * PT)
    assert not emit_dot(c, pen, 11 * PT, 5 * PT, (0, 0))
    assert emit_dot(c, pen, 10 * PT, 5 * PT, (0, 0))
    assert len(c.items) == 2


def test_dots_skip_accounting():
    c = Canvas()
    emit_dot(c, PenState(), 5 * PT, 5 * PT, (0, 0))
    assert c.empty


def test_symbols():
    d = Symbol.disk()
    assert (d.width, d.height, d.depth, d.xshift, d.yshift) == (PT, PT // 2, PT // 2, PT // 2, 0)
    r = Symbol.rect(PT, PT)
    assert (r.xshift, r.yshift) == (PT // 2, PT // 2)
    assert Symbol.glyph("").shape == "empty"
    assert symbol_from_box(text_box("x")).shape == "glyph"


def test_anchored_symbol():
    s = Symbol.rect(2 * PT, 2 * PT).anchored("lb")
    assert (s.xshift, s.yshift) == (0, 0)
