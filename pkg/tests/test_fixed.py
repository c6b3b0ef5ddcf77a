import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import PT, pt
from pictex.fixed import (
    MAX_DIMEN, DecimalSyntaxError, Dimen, DimensionOverflow, UNITY, divide, fmul,
    format_scaled, lattice, log10_of, parse_decimal, parse_dimen, pythag, round_decimals,
    scale_down, scale_to_integers, sincos, tdiv,
)


# --- literals

@pytest.mark.parametrize("text,sp", [
    ("1pt", UNITY), ("-.2pt", -13107), ("0.5pt", 32768), ("1in", 4736286),
    ("12pt", 12 * UNITY), ("7sp", 7), ("1pc", 12 * UNITY), ("+3pt", 3 * UNITY),
])
def test_parse_dimen(text, sp):
    assert parse_dimen(text) == sp


@pytest.mark.parametrize("bad", ["", "pt", "3", "3xx", "1.2.3pt"])
def test_parse_dimen_rejects(bad):
    with pytest.raises(DecimalSyntaxError):
        parse_dimen(bad)


def test_dimension_too_large():
    with pytest.raises(DimensionOverflow):
        parse_dimen("16384pt")
    assert parse_dimen("16383.99998pt") <= MAX_DIMEN


def test_round_decimals_matches_tex():
    # TeX reads .1 as 6554 sp, .33333 as 21845
    assert round_decimals("1") == 6554
    assert round_decimals("33333") == 21845
    assert round_decimals("") == 0


@given(st.integers(min_value=-MAX_DIMEN, max_value=MAX_DIMEN))
def test_format_scaled_round_trips(s):
    assert parse_decimal(format_scaled(s)) == s


def test_dimen_str():
    assert str(Dimen.pt("2.5")) == "2.5pt"
    assert repr(Dimen(UNITY)) == "Dimen(1.0pt)"
    with pytest.raises(TypeError):
        Dimen.pt(2.5)


def test_tdiv_truncates_toward_zero():
    assert tdiv(7, 2) == 3
    assert tdiv(-7, 2) == -3
    assert tdiv(7, -2) == -3
    with pytest.raises(ZeroDivisionError):
        tdiv(1, 0)


def test_fmul_matches_factor_times_length():
    assert fmul(parse_decimal("0.5"), 10 * PT) == 5 * PT
    assert fmul(parse_decimal("-2"), 3 * PT) == -6 * PT
    assert fmul(parse_decimal("1.5"), -PT) == -(PT + PT // 2)


# --- divide

def test_divide_exact_ratios():
    assert divide(10 * PT, 2 * PT) == 5 * PT
    assert divide(100 * PT, 50 * PT) == 2 * PT


def test_divide_one_third():
    # 256 * 256 long division of 1/3 gives floor(65536 / 3)
    assert divide(PT, 3 * PT) == 21845
    assert abs(divide(PT, 3 * PT) - Fraction(PT, 3)) <= 16


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        divide(PT, 0)


@given(st.integers(-1000 * PT, 1000 * PT), st.integers(PT // 100, 2000 * PT),
       st.booleans())
def test_divide_close_to_rational(a, b, neg):
    b = -b if neg else b
    exact = Fraction(a, b) * UNITY
    if abs(exact) >= MAX_DIMEN // 2:
        return
    try:
        q = divide(a, b)
    except DimensionOverflow:
        return
    assert abs(q - exact) <= 16


# --- pythag

def test_pythag_examples():
    assert abs(pythag(3 * PT, 4 * PT) - 5 * PT) <= pt(0.01)
    assert pythag(0, 0) == 0
    assert pythag(PT, PT) == 92681
    assert abs(pythag(PT, PT) / PT - math.sqrt(2)) <= 0.01


@given(st.integers(-500 * PT, 500 * PT), st.integers(-500 * PT, 500 * PT))
def test_pythag_tolerance(a, b):
    true = math.hypot(a, b)
    assert abs(pythag(a, b) - true) <= max(pt(0.01), 0.002 * true)


def test_pythag_symmetric():
    assert pythag(-3 * PT, 4 * PT) == pythag(3 * PT, -4 * PT)


# --- sincos

def test_sincos_zero():
    assert sincos(0) == (0, 32 * PT)


def test_sincos_two_points():
    s, c = sincos(2 * PT)
    assert abs(s / PT - 32 * math.sin(1 / 16)) <= 0.001
    assert abs(c / PT - 32 * math.cos(1 / 16)) <= 0.001


@given(st.integers(-pt(4.2), pt(4.2)))
def test_sincos_accuracy(d):
    s, c = sincos(d)
    a = d / PT / 32
    assert abs(s / PT - 32 * math.sin(a)) <= 0.001
    assert abs(c / PT - 32 * math.cos(a)) <= 0.001


# --- log10

@pytest.mark.parametrize("text,expected", [("1", "0.0"), ("-5", "0.0"), ("100", "2.0"),
                                           ("10", "1.0")])
def test_log10_exact(text, expected):
    assert log10_of(text) == expected


def test_log10_two():
    assert log10_of("2") == "0.301"
    assert abs(float(log10_of("2")) - math.log10(2)) <= 5e-4


def test_log10_small_fraction():
    assert abs(float(log10_of("0.05")) - math.log10(0.05)) <= 5e-4


def test_log10_malformed():
    with pytest.raises(DecimalSyntaxError):
        log10_of("abc")


# --- lattice

def test_lattice_examples():
    assert lattice(0, 5 * PT, 12 * PT) == (3, 15 * PT)
    assert lattice(0, 5 * PT, 15 * PT) == (3, 15 * PT)


@given(st.integers(-100 * PT, 100 * PT), st.integers(1, 20 * PT), st.integers(-200 * PT, 200 * PT))
def test_lattice_brute_force(anchor, span, low):
    k, pos = lattice(anchor, span, low)
    assert pos == anchor + k * span
    assert pos >= low > pos - span


def test_lattice_scan_example():
    k, pos = lattice(2 * PT, 5 * PT, -11 * PT)
    scan = min(j for j in range(-10, 10) if 2 * PT + j * 5 * PT >= -11 * PT)
    assert k == scan and pos == -8 * PT


def test_lattice_bad_span():
    with pytest.raises(ValueError):
        lattice(0, 0, 0)


# --- tick arithmetic

@pytest.mark.parametrize("args,expected", [
    (("0", "20", "5"), (0, 200, 50, 10)),
    (("0", "2", "0.5"), (0, 20, 5, 10)),
    (("-1.25", "1.25", "0.25"), (-125, 125, 25, 100)),
])
def test_scale_to_integers(args, expected):
    assert scale_to_integers(*args) == expected


def test_scale_to_integers_errors():
    with pytest.raises(DecimalSyntaxError):
        scale_to_integers("a", "1", "1")
    with pytest.raises(ZeroDivisionError):
        scale_to_integers("0", "1", "0")


@pytest.mark.parametrize("n,scale,text", [(200, 10, "20.0"), (5, 100, "0.05"),
                                          (-125, 100, "-1.25"), (0, 10, "0.0")])
def test_scale_down(n, scale, text):
    assert scale_down(n, scale) == text


@given(st.integers(-10**6, 10**6), st.sampled_from([10, 100, 1000]))
def test_scale_down_reads_back(n, scale):
    assert Fraction(scale_down(n, scale)) == Fraction(n, scale)
