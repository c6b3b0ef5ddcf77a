import math

import pytest

from conftest import PT, dots, pt, rules
from pictex.context import Picture
from pictex.fixed import divide, parse_dimen
from pictex.geom import EmptyBox, text_box
from pictex.path import (
    QuadSegment, circular_arc, dashed_layout, elliptical_arc, frame, histogram,
    inverse_model, ljoin, plot_curve, putbar, putrectangle, putrule, qjoin, rectangle, start,
    arrow, betweenarrows,
)
from pictex.pen import set_dash_pattern, set_dashes

HALF = PT // 2  # default disk anchor offset


def dim_pic():
    p = Picture()
    p.state.coords.mode = "dimension"
    return p


def centres(p):
    """Dot positions moved back onto the curve (undo the disk anchor)."""
    return [(x + HALF, y) for x, y in dots(p)]


# --- start / ljoin

def test_start_resets_path():
    p = dim_pic()
    start(p, 3 * PT, 4 * PT)
    c = p.state.cursor
    assert (c.xS, c.yS) == (3 * PT, 4 * PT) and p.shared.total == 0


def test_start_resets_dash_phase():
    p = dim_pic()
    p.state.pen.set_pattern(set_dashes(5 * PT))
    start(p, 0, 0)
    ljoin(p, 7 * PT, 0)
    assert p.state.cursor.distacross != 0
    start(p, 0, 0)
    assert p.state.cursor.distacross == 0
    assert p.state.pen.down == 5 * PT


def test_solid_ljoin_dot_count():
    p = dim_pic()
    start(p, 0, 0)
    ljoin(p, 10 * PT, 0)
    xs = [x for x, _ in centres(p)]
    assert len(xs) == 26
    assert xs[0] == 0 and abs(xs[-1] - 10 * PT) <= 25
    assert p.shared.total == 10 * PT


def test_zero_length_join_gives_two_dots():
    p = dim_pic()
    start(p, PT, PT)
    ljoin(p, PT, PT)
    assert centres(p) == [(PT, PT), (PT, PT)]


def test_dashed_ljoin_stations():
    p = dim_pic()
    p.state.pen.set_pattern(set_dashes(5 * PT))
    start(p, 0, 0)
    ljoin(p, 20 * PT, 0)
    sp = p.state.pen.spacing
    for x, _ in centres(p):
        assert (-sp <= x < 5 * PT + sp) or (10 * PT - sp <= x < 15 * PT + sp)
    assert any(x > 10 * PT for x, _ in centres(p))


def test_plot_curve_arity():
    with pytest.raises(ValueError):
        plot_curve(dim_pic(), [(0, 0), (PT, 0)], "quadratic")
    with pytest.raises(ValueError):
        plot_curve(dim_pic(), [(0, 0)], "linear")


# --- quadratics

def test_collinear_arc_length_is_exact():
    seg = QuadSegment.through((0, 0), (5 * PT, 0), (10 * PT, 0))
    mid, full = seg.arc_lengths()
    assert abs(full - 10 * PT) <= pt(0.01)
    assert abs(mid - 5 * PT) <= pt(0.01)


def test_quad_endpoints():
    seg = QuadSegment.through((PT, 2 * PT), (4 * PT, 9 * PT), (10 * PT, 3 * PT))
    assert seg.point(0) == (PT, 2 * PT)
    assert seg.point(HALF) == (4 * PT, 9 * PT)
    assert seg.point(PT) == (10 * PT, 3 * PT)


def test_inverse_model_symmetric():
    m = inverse_model(5 * PT, 10 * PT)
    assert m.quadratic and m.beta == PT and m.gamma == 0
    assert m.t_at(0) == 0 and m.t_at(10 * PT) == PT


def test_inverse_model_skewed():
    m = inverse_model(35 * PT // 8, 10 * PT)  # w = 3.5
    assert abs(m.beta / PT - (32 - 12.25) / (4.5 * 3.5)) <= 1e-4
    ts = [m.t_at(d * PT // 10) for d in range(0, 101)]
    assert ts == sorted(ts)
    assert abs(ts[-1] - PT) <= 2


def test_inverse_model_falls_back_outside_window():
    assert not inverse_model(PT, 10 * PT).quadratic  # w = 0.8


def test_qjoin_fallback_is_diagnosed():
    p = dim_pic()
    start(p, 0, 0)
    qjoin(p, PT, 0, 10 * PT, 0)
    assert any("middle third" in d for d in p.shared.diagnostics)


# --- arcs

def test_quarter_circle_endpoint():
    p = Picture()
    circular_arc(p, "90", 50 * PT, 0, 0, 0)
    ex, ey = p.state.cursor.xS, p.state.cursor.yS
    assert abs(ex) <= pt(0.5) and abs(ey - 50 * PT) <= pt(0.5)


def test_zero_degree_arc_draws_nothing_more_than_start():
    p = Picture()
    circular_arc(p, "0", 50 * PT, 0, 0, 0)
    assert dots(p) == []
    assert (p.state.cursor.xS, p.state.cursor.yS) == (50 * PT, 0)


def test_negative_arc_mirrors_positive():
    a, b = Picture(), Picture()
    circular_arc(a, "15", 50 * PT, 0, 0, 0)
    circular_arc(b, "-15", 50 * PT, 0, 0, 0)
    assert a.state.cursor.xS == b.state.cursor.xS
    assert a.state.cursor.yS == -b.state.cursor.yS


def test_arc_dots_near_circle():
    p = Picture()
    circular_arc(p, "120", 30 * PT, 0, 0, 0)
    for x, y in centres(p):
        assert abs(math.hypot(x, y) / PT - 30) <= 0.1


def test_elliptical_arc_axes():
    p = Picture()
    elliptical_arc(p, "2", "1", "90", 20 * PT, 0, 0, 0)
    # (20, 0) normalises to (10, 0); a quarter turn and the y ratio give (0, 10)
    assert abs(p.state.cursor.xS) <= pt(0.5)
    assert abs(p.state.cursor.yS - 10 * PT) <= pt(0.5)


def test_degenerate_arc():
    with pytest.raises(ValueError):
        circular_arc(Picture(), "90", 0, 0, 0, 0)


# --- arrows

def test_flat_arrowhead_collapses_onto_shaft():
    p = dim_pic()
    arrow(p, 4 * PT, "0", "0", (0, 0), 0, 0, 20 * PT, 0)
    assert {y for _, y in centres(p)} == {0}
    assert max(x for x, _ in centres(p)) == 20 * PT


def test_arrow_tip_offset():
    p = dim_pic()
    arrow(p, 4 * PT, "0", "0", (PT, 0), 0, 0, 20 * PT, 0)
    assert max(x for x, _ in centres(p)) == 21 * PT


def test_arrow_degenerate():
    with pytest.raises(ValueError):
        arrow(dim_pic(), 4 * PT, ".2", ".4", (0, 0), PT, PT, PT, PT)


def test_betweenarrows_horizontal():
    p = dim_pic()
    betweenarrows(p, text_box("ab"), "", (0, 0), 0, 0, 40 * PT, 0)
    bodies = rules(p)
    margin = p.state.metrics.em * 4 // 10
    assert [r.w for r in bodies] == [(40 * PT - 10 * PT) // 2 - margin] * 2


def test_betweenarrows_vertical_meet():
    p = dim_pic()
    betweenarrows(p, EmptyBox(), "", (0, 0), 0, 0, 0, 40 * PT)
    a, b = rules(p)
    assert a.y + a.h == b.y == 20 * PT


def test_betweenarrows_diagonal():
    p = dim_pic()
    betweenarrows(p, text_box("a"), "", (0, 0), 0, 0, 4 * PT, 4 * PT)
    assert p.canvas.items == [] and p.shared.diagnostics


# --- rules

def spans_of(p):
    return sorted((r.x, r.x + r.w) for r in rules(p))


def test_solid_rule():
    p = dim_pic()
    putrule(p, (0, 0), 0, 0, 20 * PT, 0)
    (r,) = rules(p)
    assert (r.w, r.h) == (20 * PT, parse_dimen(".4pt"))


def test_dashed_rule_residual():
    p = dim_pic()
    p.state.pen.set_pattern(set_dashes(5 * PT))
    putrule(p, (0, 0), 0, 0, 23 * PT, 0)
    assert spans_of(p) == [(0, 5 * PT), (10 * PT, 15 * PT), (20 * PT, 23 * PT)]


def test_dashed_rule_backward_starts_at_start_point():
    fwd, back = dim_pic(), dim_pic()
    for p in (fwd, back):
        p.state.pen.set_pattern(set_dash_pattern([3 * PT, 2 * PT, PT, 2 * PT]))
    putrule(fwd, (0, 0), 0, 0, 23 * PT, 0)
    putrule(back, (0, 0), 23 * PT, 0, 0, 0)
    L = 23 * PT
    assert spans_of(back) == sorted((L - b, L - a) for a, b in spans_of(fwd))


def test_dashed_vertical_rule():
    p = dim_pic()
    p.state.pen.set_pattern(set_dashes(5 * PT))
    putrule(p, (0, 0), 0, 23 * PT, 0, 0)  # downward is the forward direction
    got = sorted((r.y, r.y + r.h) for r in rules(p))
    assert got == [(0, 3 * PT), (8 * PT, 13 * PT), (18 * PT, 23 * PT)]


def test_dashed_layout_lengths_sum():
    pat = set_dash_pattern([2 * PT, PT])
    assert dashed_layout(pat, 7 * PT, True) == [(0, 2 * PT), (3 * PT, 5 * PT), (6 * PT, 7 * PT)]


def test_diagonal_rule_diagnosed():
    p = dim_pic()
    putrule(p, (0, 0), 0, 0, PT, PT)
    assert p.canvas.items == [] and p.shared.diagnostics


def test_putbar():
    p = dim_pic()
    putbar(p, (0, 0), 4 * PT, 0, 5 * PT, 10 * PT, 5 * PT)
    q = dim_pic()
    putrectangle(q, (0, 0), (0, 3 * PT), (10 * PT, 7 * PT))
    assert p.canvas.items == q.canvas.items
    z, r = dim_pic(), dim_pic()
    putbar(z, (0, 0), 0, 0, 0, 10 * PT, 0)
    putrule(r, (0, 0), 0, 0, 10 * PT, 0)
    assert z.canvas.items == r.canvas.items


def test_vertical_bar_widens_x():
    p = dim_pic()
    putbar(p, (0, 0), 2 * PT, 5 * PT, 0, 5 * PT, 10 * PT)
    xl, _, xr, _ = p.canvas.bbox()
    th = parse_dimen(".4pt")
    assert xl == 4 * PT - th // 2 and xr == 6 * PT + th - th // 2


def test_putrectangle_extents():
    p = dim_pic()
    putrectangle(p, (0, 0), (0, 0), (10 * PT, 6 * PT))
    horiz = [r for r in rules(p) if r.w > r.h]
    vert = [r for r in rules(p) if r.h > r.w]
    h = parse_dimen(".4pt") // 2
    assert all(r.x == -h and r.x + r.w == 10 * PT + h for r in horiz)
    assert all(r.y == -h and r.y + r.h == 6 * PT + h for r in vert)


def test_putrectangle_order_free():
    a, b = dim_pic(), dim_pic()
    putrectangle(a, (0, 0), (0, 0), (10 * PT, 6 * PT))
    putrectangle(b, (0, 0), (10 * PT, 6 * PT), (0, 0))
    assert a.canvas.items == b.canvas.items


def test_zero_area_rectangle():
    p = dim_pic()
    putrectangle(p, (0, 0), (PT, PT), (PT, PT))
    assert len(rules(p)) == 4


def test_frame_and_rectangle():
    p = Picture()
    box = rectangle(p, 10 * PT, 5 * PT)
    h = parse_dimen(".4pt") // 2
    assert (box.xleft, box.ybot) == (-h, -h)
    framed = frame(p, 2 * PT, EmptyBox(10 * PT, 5 * PT, 0))
    assert (framed.xleft, framed.ybot) == (-2 * PT - h, -2 * PT - h)
    assert framed.xright == 12 * PT + h
    twice = frame(p, PT, framed)
    assert twice.width == framed.width + 2 * PT + 2 * h


def test_histogram_keeps_base():
    p = dim_pic()
    histogram(p, [(0, 0), (PT, 3 * PT), (2 * PT, PT)])
    q = dim_pic()
    putrectangle(q, (0, 0), (0, 0), (PT, 3 * PT))
    putrectangle(q, (0, 0), (PT, 0), (2 * PT, PT))
    assert p.canvas.items == q.canvas.items


def test_totalarclength_accumulates():
    p = dim_pic()
    plot_curve(p, [(0, 0), (3 * PT, 4 * PT), (3 * PT, 10 * PT)], "linear")
    assert abs(p.shared.total - 11 * PT) <= pt(0.01)


def test_divide_used_for_t():
    # dashed stations land at distacross / arclength along the chord
    p = dim_pic()
    p.state.pen.set_pattern(set_dash_pattern([PT, PT]))
    start(p, 0, 0)
    ljoin(p, 10 * PT, 0)
    xs = [x for x, _ in centres(p)]
    assert xs[0] == 0 and divide(xs[1], 10 * PT) > 0
