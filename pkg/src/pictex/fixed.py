"""Scaled-integer arithmetic.

Every length is an integer count of scaled points (sp), 65536 sp to the
point.  The routines here reproduce TeX's register arithmetic: factors are
16.16 fixed-point decimals, divisions truncate toward zero, and the
iterative kernels (division, hypotenuse, sine/cosine, log10) follow the
exact order of operations of the original macros so results agree to the sp.
"""

from __future__ import annotations

import re
from typing import NamedTuple

UNITY = 65536
MAX_DIMEN = 0x3FFFFFFF
_LIMIT = 1 << 30


class DimensionOverflow(OverflowError):
    """Raised when a length leaves the representable range."""


class DecimalSyntaxError(ValueError):
    pass


def _check(v: int) -> int:
    if -_LIMIT < v < _LIMIT:
        return v
    raise DimensionOverflow("Dimension too large")


def tdiv(a: int, b: int) -> int:
    """Integer division truncating toward zero (TeX's \\divide)."""
    if b == 0:
        raise ZeroDivisionError("Arithmetic overflow: division by zero")
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def imul(n: int, v: int) -> int:
    """Integer times length, overflow-checked."""
    return _check(n * v)


def round_decimals(digits: str) -> int:
    """Fraction digits to a 16.16 fraction, exactly as TeX rounds them."""
    a = 0
    for ch in reversed(digits[:17]):
        a = (a + int(ch) * 0x20000) // 10
    return (a + 1) // 2


_NUM = re.compile(r"\s*([+\-\s]*)(\d*)(?:[.,](\d*))?\s*\Z")


def _split(text: str) -> tuple[bool, int, str]:
    m = _NUM.match(text)
    if not m or not (m.group(2) or m.group(3)):
        raise DecimalSyntaxError(f"not a decimal numeral: {text!r}")
    neg = m.group(1).count("-") % 2 == 1
    return neg, int(m.group(2) or "0"), m.group(3) or ""


def parse_decimal(text: str) -> int:
    """A decimal numeral read as a factor, returned in sp (value * 65536)."""
    neg, ip, frac = _split(str(text))
    v = ip * UNITY + round_decimals(frac)
    return -v if neg else v


# num/denom pairs from TeX's unit table; 'pt' and 'sp' are special-cased
UNITS = {
    "pt": (1, 1),
    "in": (7227, 100),
    "pc": (12, 1),
    "cm": (7227, 254),
    "mm": (7227, 2540),
    "bp": (7227, 7200),
    "dd": (1238, 1157),
    "cc": (14856, 1157),
    "sp": (0, 0),
}

_DIM = re.compile(r"\s*([+\-\s]*)(\d*)(?:[.,](\d*))?\s*([a-z]{2})\s*\Z")


def parse_dimen(text: str) -> "Dimen":
    """Read a dimension literal such as ``3.5pt``, ``-.2pt`` or ``24in``."""
    m = _DIM.match(str(text))
    if not m or not (m.group(2) or m.group(3)):
        raise DecimalSyntaxError(f"not a dimension: {text!r}")
    unit = m.group(4)
    if unit not in UNITS:
        raise DecimalSyntaxError(f"Illegal unit of measure ({unit})")
    neg = m.group(1).count("-") % 2 == 1
    ip = int(m.group(2) or "0")
    if unit == "sp":
        v = ip
    else:
        f = round_decimals(m.group(3) or "")
        if unit != "pt":
            num, den = UNITS[unit]
            ip, rem = divmod(ip * num, den)
            f = (num * f + UNITY * rem) // den
            ip += f // UNITY
            f %= UNITY
        if ip >= 0x4000:
            raise DimensionOverflow("Dimension too large")
        v = ip * UNITY + f
    v = _check(v)
    return Dimen(-v if neg else v)


def format_scaled(s: int) -> str:
    """TeX's print_scaled: the shortest decimal that reads back as ``s``."""
    out = ""
    if s < 0:
        out = "-"
        s = -s
    out += str(s // UNITY) + "."
    s = 10 * (s % UNITY) + 5
    delta = 10
    while True:
        if delta > UNITY:
            s += 0x8000 - 50000
        out += str(s // UNITY)
        s = 10 * (s % UNITY)
        delta *= 10
        if s <= delta:
            break
    return out


class Dimen(int):
    """A length in scaled points."""

    __slots__ = ()

    @classmethod
    def parse(cls, text: str) -> "Dimen":
        return parse_dimen(text)

    @classmethod
    def pt(cls, value) -> "Dimen":
        """``Dimen.pt("2.5")`` or ``Dimen.pt(3)``; floats are refused."""
        if isinstance(value, float):
            raise TypeError("use a decimal string, not a float")
        return parse_dimen(f"{value}pt")

    @property
    def sp(self) -> int:
        return int(self)

    def __str__(self) -> str:
        return format_scaled(self) + "pt"

    def __repr__(self) -> str:
        return f"Dimen({format_scaled(self)}pt)"


ZERO = Dimen(0)
PT = Dimen(UNITY)


def _xn_over_d(x: int, n: int, d: int) -> int:
    q = abs(x) * n // d
    if q >= 0x80000000:
        raise DimensionOverflow("Arithmetic overflow")
    return q if x >= 0 else -q


def fmul(factor: int, v: int) -> int:
    """``<decimal factor><dimen>``: factor given in sp, as TeX scales it."""
    neg = factor < 0
    ip, frac = divmod(abs(factor), UNITY)
    r = _check(ip * v + _xn_over_d(v, frac, UNITY))
    return -r if neg else r


def half(v: int) -> int:
    """``.5<dimen>``, which truncates toward zero."""
    return fmul(UNITY // 2, v)


def divide(a: int, b: int) -> Dimen:
    """a/b as a length in pt units, by the long-division macro."""
    if b == 0:
        raise ZeroDivisionError("division by zero")
    B, C = int(a), int(b)
    A = D = tdiv(B, C)
    B -= D * C
    absC = abs(C)
    if absC < 64 * UNITY:
        steps: tuple[int, ...] = (256, 256)
    elif absC < 256 * UNITY:
        steps = (64, 32, 32)
    else:
        steps = (8, 8, 8, 8, 8)
    for k in steps:
        B = imul(k, B)
        D = tdiv(B, C)
        A = imul(k, A) + D
        B -= D * C
    if absC >= 256 * UNITY:
        A = imul(2, A)
    return Dimen(A)


def pythag(a: int, b: int) -> Dimen:
    """Approximate sqrt(a^2 + b^2) with three Newton steps."""
    E = abs(int(a))
    F = E + abs(int(b))
    if F == 0:
        return ZERO
    E = divide(imul(8, E), F)
    E -= 4 * UNITY
    E = imul(2, E)
    E = fmul(E, E)
    E += 64 * UNITY
    E = tdiv(E, 2)
    H = 7 * UNITY
    for _ in range(3):
        H += divide(E, H)
        H = tdiv(H, 2)
    return Dimen(tdiv(fmul(H, F), 8))


def sincos(d: int) -> tuple[Dimen, Dimen]:
    """(32 sin(d/32), 32 cos(d/32)) by a truncated series."""
    A = int(d)
    B = 32 * UNITY
    C = tdiv(fmul(d, d), 64)
    B -= C
    C = tdiv(fmul(d, C), 96)
    A -= C
    C = tdiv(fmul(d, C), 128)
    B += C
    return Dimen(A), Dimen(B)


ROOTTEN = parse_dimen("3.162278pt")
_TEN_AA = parse_dimen("8.690286pt")
_TEN_AC = parse_dimen("2.773839pt")
_TEN_AE = parse_dimen("2.543275pt")

_LOGNUM = re.compile(r"(\d*)(?:\.(\d*))?\Z")


def log10_of(text: str) -> str:
    """Common logarithm of a decimal numeral, returned as a decimal string.

    Negative arguments give 0, as the original does.
    """
    s = str(text).strip()
    if s.startswith("-"):
        return "0.0"
    if s.startswith("+"):
        s = s[1:]
    m = _LOGNUM.match(s)
    if not m or not (m.group(1) or m.group(2)):
        raise DecimalSyntaxError(f"not a decimal numeral: {text!r}")
    whole, frac = m.group(1) or "0", m.group(2) or ""
    first, rest = whole[0], whole[1:]
    F = UNITY
    if first == "0":
        # characteristic from the leading-zero scan of the fraction; any
        # integer digits after the leading 0 are ignored, as in the macro
        for i, ch in enumerate(frac):
            F -= UNITY
            if ch != "0":
                E = parse_decimal(f"{ch}.{frac[i + 1:]}")
                break
        else:
            F, E = UNITY, UNITY
    else:
        F += len(rest) * UNITY
        E = parse_decimal(f"{first}.{rest}{frac}")
    if E < ROOTTEN:
        E = imul(10, E)
        F -= UNITY
    G = E + 10 * UNITY
    E = imul(10, E - 10 * UNITY)
    t = divide(E, G)
    tt = fmul(t, t)
    H = tdiv(fmul(tt, _TEN_AE), 100) + _TEN_AC
    H = tdiv(fmul(tt, H), 100) + _TEN_AA
    H = tdiv(fmul(t, H), 100)
    return format_scaled(F + H)


class LatticeResult(NamedTuple):
    index: int
    position: Dimen


def lattice(anchor: int, span: int, low: int) -> LatticeResult:
    """First lattice point anchor + k*span that is >= low."""
    if span <= 0:
        raise ValueError("lattice span must be positive")
    C = low - anchor
    k = tdiv(C, span)
    if C > 0 and k * span < C:
        k += 1
    return LatticeResult(k, Dimen(k * span + anchor))


def _fraction_digits(text: str) -> int:
    _split(text)
    t = text.strip()
    return len(t.split(".", 1)[1]) if "." in t else 0


def scale_to_integers(start: str, stop: str, step: str) -> tuple[int, int, int, int]:
    """Turn a from/to/by triple into exact integers sharing one power of ten."""
    k = max(1, *(_fraction_digits(a) for a in (start, stop, step)))
    scale = 10**k
    vals = []
    for a in (start, stop, step):
        neg, ip, frac = _split(a)
        n = ip * scale + int((frac + "0" * k)[:k] or "0")
        vals.append(-n if neg else n)
    if vals[2] == 0:
        raise ZeroDivisionError("tick increment is zero")
    return vals[0], vals[1], vals[2], scale


def scale_down(n: int, scale: int) -> str:
    """n/scale as text, zero-padded the way the tick macro pads it."""
    sign = "-" if n < 0 else ""
    n = abs(n)
    q, r = divmod(n, scale)
    out = f"{sign}{q}."
    c = max(r, 1) * 10
    while scale > c:
        out += "0"
        c *= 10
    return out + str(r)
