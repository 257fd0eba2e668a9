"""Extended-precision (x86 long double) scalar support.

Verify-grade reruns rebuild and re-evaluate the structured representation
in ``numpy.longdouble`` (64-bit mantissa on x86, eps ~ 1.1e-19), pushing
the conditioning floor of ill-conditioned evaluations ~3 decades below
double precision.  On platforms where ``longdouble`` is plain float64 the
escalation is a no-op; ``HAS_EXTENDED`` reports which.

Rational recurrences run natively in long double; the one transcendental
constant family the pipeline needs -- Gamma values at the base orders --
is produced through mpmath (30 significant digits, then rounded once to
long double).  mpmath is an optional dependency used only on this path.
"""

from __future__ import annotations

import numpy as np

LD = np.longdouble
HAS_EXTENDED = np.finfo(LD).eps < 1e-18

PI = LD("3.14159265358979323846264338327950288")
SQRT_PI = LD("1.77245385090551602729816748334114518")
EULER_GAMMA = LD("0.577215664901532860606512090082402431")

_CACHE: dict[float, np.longdouble] = {}


def _mp():
    try:
        import mpmath
    except ImportError as exc:  # pragma: no cover
        raise ImportError(
            "extended-precision mode needs the optional dependency mpmath "
            "(pip install quarteig[extended])"
        ) from exc
    return mpmath


def gamma_ld(x) -> np.longdouble:
    """Gamma(x) rounded once from a 30-digit evaluation."""
    x = float(x)
    hit = _CACHE.get(x)
    if hit is not None:
        return hit
    mp = _mp()
    with mp.workdps(30):
        val = LD(mp.nstr(mp.gamma(x), 25))
    _CACHE[x] = val
    return val


def rgamma_ld(x) -> np.longdouble:
    """1/Gamma in long double, exactly 0 at the poles."""
    x = float(x)
    if x <= 0 and x == np.floor(x):
        return LD(0)
    return LD(1) / gamma_ld(x)


# ---------------------------------------------------------------------------
# arbitrary-precision tier


def mp_dtype(dps: int = 40):
    """Scalar factory for the mpmath escalation tier (sets the working dps)."""
    mp = _mp()
    mp.mp.dps = max(mp.mp.dps, dps)
    return mp.mpf


def eval_mp(fn, x):
    """Evaluate a BesselSum at x with mpmath (exact measurement tier).

    Coefficients convert to mpf exactly (binary floats); ladder values come
    from mpmath's Bessel functions at the current working precision.
    """
    mp = _mp()
    x = mp.mpf(x) if not isinstance(x, mp.mpf) else x
    total = mp.mpf(0)
    for l, poly in fn.items():
        a = mp.mpf(fn.beta) + l
        if fn.kind.value == "I":
            b = (x / 2) ** (-a) * mp.besseli(a, x)
        else:
            b = (x / 2) ** (-a) * mp.besselk(a, x)
        pv = mp.mpf(0)
        for p, c in poly.items():
            if isinstance(c, LD) and HAS_EXTENDED:
                c = mp.mpf(np.format_float_scientific(c, precision=25))
            elif not isinstance(c, mp.mpf):
                c = mp.mpf(float(c))
            pv += c * x**p
        total += pv * b
    return total
