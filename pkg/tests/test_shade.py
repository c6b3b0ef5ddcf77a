import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PT, pt
from pictex.context import Picture
from pictex.fixed import divide, fmul, parse_dimen
from pictex.pen import Symbol
from pictex.shade import (
    Band, getcoeffs, lshade, qshade, set_shade_grid, set_shade_symbol, shade_rectangle,
    shade_stations, start_shade,
)

ZERO = (0, 0, 0, 0)
S5 = 5 * PT


def linear(band, a_end, lo, hi):
    dx = a_end - band.xS
    tb, bb = divide(hi - band.ytS, dx), divide(lo - band.ybS, dx)
    return lambda d: (fmul(d, bb) + band.ybS, fmul(d, tb) + band.ytS)


def stations(a0, lo0, hi0, a1, lo1, hi1, span=S5, anchors=(0, 0), shrink=ZERO):
    band = Band(False, a0, lo0, hi0, (0, 0))
    return shade_stations(band, a1, linear(band, a1, lo1, hi1), span, anchors, shrink)


def test_square_checkerboard():
    got = set(stations(0, 0, 10 * PT, 10 * PT, 0, 10 * PT))
    assert got == {(0, 0), (0, 10 * PT), (5 * PT, 5 * PT), (10 * PT, 0), (10 * PT, 10 * PT)}


def test_columns_of_a_strip():
    cols = sorted({c for c, _ in stations(0, 0, 10 * PT, 10 * PT, 0, 10 * PT)})
    assert cols == [0, 5 * PT, 10 * PT]


def test_shrink_drops_edge_columns():
    cols = {c for c, _ in stations(0, 0, 10 * PT, 10 * PT, 0, 10 * PT, shrink=(PT, PT, 0, 0))}
    assert cols == {5 * PT}


def test_zero_height_band():
    got = stations(0, 3 * PT, 3 * PT, 20 * PT, 3 * PT, 3 * PT)
    cols = [c for c, _ in got]
    assert len(cols) == len(set(cols))


def test_negative_height_is_empty():
    assert stations(0, 5 * PT, 0, 10 * PT, 5 * PT, 0) == []


def band_at(anchors):
    return set(stations(0, 0, 17 * PT, 23 * PT, 2 * PT, 9 * PT, anchors=anchors))


@pytest.mark.parametrize("kx,ky", [(2, 0), (0, 2), (-4, 6), (1, 1), (3, -1)])
def test_anchor_translation_invariance(kx, ky):
    # column parity counts from the anchor, so an odd x shift must be
    # paired with an odd y shift to keep the checkerboard phase
    base = band_at((PT, 2 * PT))
    assert band_at((PT + kx * S5, 2 * PT + ky * S5)) == base


def test_odd_column_shift_flips_phase():
    assert band_at((PT + S5, 2 * PT)) != band_at((PT, 2 * PT))


def test_odd_column_offset():
    got = stations(0, 0, 20 * PT, 5 * PT, 0, 20 * PT)
    col1 = sorted(r for c, r in got if c == S5)
    assert col1 == [S5, 3 * S5]


@settings(max_examples=50)
@given(st.integers(-50, 50), st.integers(1, 40), st.integers(-30, 30), st.integers(0, 30),
       st.integers(-30, 30), st.integers(0, 30))
def test_checkerboard_and_containment(a0, w, lo0, h0, lo1, h1):
    a0, a1 = a0 * PT, (a0 + w) * PT
    got = stations(a0, lo0 * PT, (lo0 + h0) * PT, a1, lo1 * PT, (lo1 + h1) * PT)
    by_col = {}
    for c, r in got:
        assert a0 <= c <= a1
        by_col.setdefault(c, []).append(r)
    for c, rows in by_col.items():
        if c + S5 in by_col:
            for r in rows:
                for r2 in by_col[c + S5]:
                    assert ((r - r2) // S5) % 2 == 1


# --- boundaries

def test_getcoeffs_collinear():
    b, c = getcoeffs(0, 0, 5 * PT, 5 * PT, 10 * PT, 10 * PT)
    assert c == 0 and b == PT


def test_getcoeffs_parabola_passes_through_points():
    x = [0, 2 * PT, 10 * PT]
    y = [PT, 7 * PT, -3 * PT]
    b, c = getcoeffs(x[0], y[0], x[1], y[1], x[2], y[2])
    for xi, yi in zip(x, y):
        d = xi - x[0]
        # the sp error in C is multiplied by dx twice
        tol = 16 + (d / PT) ** 2
        assert abs(fmul(d, fmul(d, c) + b) + y[0] - yi) <= tol
    # textbook divided differences
    s1 = (y[1] - y[0]) / (x[1] - x[0])
    s2 = (y[2] - y[1]) / (x[2] - x[1])
    cc = (s2 - s1) / (x[2] - x[0])
    assert abs(c / PT - cc * PT) <= 1e-4
    assert abs(b / PT - (s1 - cc * (x[1] - x[0]))) <= 1e-4


def test_parabolic_top_value():
    b, c = getcoeffs(0, 0, 5 * PT, 2 * PT, 10 * PT, 0)
    d = pt(2.5)
    fitted = fmul(d, fmul(d, c) + b)
    true = 2 * (1 - ((2.5 - 5) / 5) ** 2)
    assert abs(fitted - pt(true)) <= 16


def dim_pic(span=None):
    p = Picture()
    p.state.coords.mode = "dimension"
    p.state.shade.symbol = set_shade_symbol(Symbol.disk(), ("z", "z", "z", "z"))
    if span:
        set_shade_grid(p, span)
    return p


def shade_items(p):
    return [(i.x, i.y) for i in p.canvas.items]


def test_qshade_collinear_equals_lshade():
    a, b = dim_pic(), dim_pic()
    start_shade(a, False, 0, 0, 10 * PT)
    lshade(a, 20 * PT, 4 * PT, 16 * PT)
    start_shade(b, False, 0, 0, 10 * PT)
    qshade(b, 10 * PT, 2 * PT, 13 * PT, 20 * PT, 4 * PT, 16 * PT)
    assert shade_items(a) == shade_items(b)


def test_lshade_needs_start():
    with pytest.raises(ValueError):
        lshade(dim_pic(), PT, 0, PT)


def test_lshade_zero_width_is_an_error():
    p = dim_pic()
    start_shade(p, False, 0, 0, PT)
    with pytest.raises(ZeroDivisionError):
        lshade(p, 0, 0, PT)


def test_hshade_swaps_axes():
    v, h = dim_pic(), dim_pic()
    start_shade(v, False, 0, 0, 10 * PT)
    lshade(v, 20 * PT, 0, 10 * PT)
    start_shade(h, True, 0, 0, 10 * PT)
    lshade(h, 20 * PT, 0, 10 * PT)
    half = PT // 2  # disk anchor
    vc = [(x + half, y) for x, y in shade_items(v)]
    hc = [(x + half, y) for x, y in shade_items(h)]
    assert sorted(hc) == sorted((y, x) for x, y in vc)


def test_shade_skips_bbox():
    p = dim_pic()
    start_shade(p, False, 0, 0, 10 * PT)
    lshade(p, 10 * PT, 0, 10 * PT)
    assert p.canvas.items and p.canvas.empty


def test_shade_rectangle_picks_orientation():
    p = dim_pic()
    shade_rectangle(p, 0, 0, 10 * PT, 30 * PT)
    assert p.state.shade.band.horizontal is False
    shade_rectangle(p, 0, 0, 30 * PT, 10 * PT)
    assert p.state.shade.band.horizontal is True


def test_shade_symbol_defaults():
    s = set_shade_symbol(Symbol.rect(PT, PT))
    assert (s.l, s.r, s.b, s.t) == (parse_dimen(".3pt"),) * 4
    z = set_shade_symbol(Symbol.rect(PT, PT), ("z", "z", "z", "z"))
    assert (z.l, z.r, z.b, z.t) == (0, 0, 0, 0)
    o = set_shade_symbol(Symbol.rect(PT, PT), ("1pt", None, "", None))
    assert (o.l, o.r, o.b) == (PT, parse_dimen(".3pt"), parse_dimen(".3pt"))


def test_grid_span_must_be_positive():
    with pytest.raises(ValueError):
        set_shade_grid(Picture(), 0)


def test_random_bands_deterministic():
    rng = random.Random(3)
    for _ in range(5):
        args = [rng.randint(0, 30) * PT for _ in range(3)]
        args[2] += args[1]
        assert stations(0, args[1], args[2], 20 * PT, args[1], args[2]) == \
            stations(0, args[1], args[2], 20 * PT, args[1], args[2])
