"""Error-free float transformations and compensated accumulation.

Shewchuk/Dekker building blocks (two_sum, split, two_prod) and the
Ogita-Rump-Oishi compensated dot product.  Used by the verify-grade
``double_double`` precision mode to remove accumulation error from
coefficient sums; function values entering the sums remain doubles.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    """s, err with s = fl(a+b) and a + b = s + err exactly."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """p, err with p = fl(a*b) and a * b = p + err exactly."""
    p = a * b
    ahi, alo = split(a)
    bhi, blo = split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def dot2(xs, ys) -> float:
    """Compensated dot product sum_i xs[i]*ys[i] (twice-working-precision)."""
    s = 0.0
    c = 0.0
    for x, y in zip(xs, ys):
        p, pe = two_prod(float(x), float(y))
        s, se = two_sum(s, p)
        c += pe + se
    return s + c


def sum2(xs) -> float:
    """Compensated sum (cascade of two_sum)."""
    s = 0.0
    c = 0.0
    for x in xs:
        s, e = two_sum(s, float(x))
        c += e
    return s + c
