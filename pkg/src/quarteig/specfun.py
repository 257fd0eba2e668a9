r"""Scalar special-function kernels.

Normalized modified Bessel functions

    itilde(a, z) = (z/2)**(-a) * I_a(z)
    ktilde(a, z) = (z/2)**(-a) * K_a(z)

together with the J-Bessel power series, generalized Laguerre polynomials
and the Pochhammer symbol.  The normalized pair is what the rest of the
package is built on: ``itilde`` is entire and even in ``z`` with
``itilde(a, 0) = 1/Gamma(a+1)``, ``ktilde`` is singular at ``z = 0``, and
both satisfy

    theta^2 u + 2 a theta u - z^2 u = 0,        theta = z d/dz,
    d/dz itilde_a =  (z/2) itilde_{a+1},
    d/dz ktilde_a = -(z/2) ktilde_{a+1},
    a itilde_a = itilde_{a-1} - (z/2)^2 itilde_{a+1},
    a ktilde_a = (z/2)^2 ktilde_{a+1} - ktilde_{a-1}.

Evaluation strategy
-------------------
* ``itilde``: ascending series in z^2/4 everywhere (all terms positive for
  real z, no cancellation); an exponentially scaled asymptotic form backs
  large real arguments.
* ``ktilde``: elementary exp/polynomial closed forms for half-odd-integer
  order (these extend to negative and complex arguments), a log-series plus
  upward order recurrence for integer order at small x, the reflection
  formula through two itilde series for general order at small x, and a
  graded Gauss-Legendre evaluation of the cosh integral representation for
  moderate-to-large x where reflection loses ~exp(2x) digits.

All evaluators accept scalars or numpy arrays in the argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "BesselKind",
    "BesselLadder",
    "bessel_i_norm",
    "bessel_i_norm_scaled",
    "bessel_j",
    "bessel_k_norm",
    "bessel_ladder",
    "gamma",
    "laguerre",
    "laguerre_sum",
    "pochhammer",
    "rgamma",
]

#: |x - round(x)| below which a parameter is treated as an integer.
INT_TOL = 1e-12

_SERIES_CAP = 500
_SERIES_RTOL = 1e-17
# Beyond this the reflection formula for ktilde has lost ~exp(2x) digits
# and the integral representation takes over.
_K_REFLECTION_XMAX = 4.0
# Integer-order ktilde: log-series below, cosh-integral quadrature above.
_K_INTSERIES_XMAX = 4.0

_EULER_GAMMA = 0.5772156649015328606


def gamma(x: float) -> float:
    """Gamma function (finite arguments; poles raise ValueError)."""
    return math.gamma(x)


def rgamma(x: float) -> float:
    """Reciprocal Gamma function, returning exactly 0.0 at the poles."""
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    return 1.0 / math.gamma(x)


def _scalar_kind(dtype) -> str:
    """'f8' | 'ld' | 'mp' for a numpy dtype or a scalar factory callable."""
    if dtype is float:
        return "f8"
    name = getattr(dtype, "__name__", None) or str(getattr(dtype, "name", dtype))
    if "float128" in name or "longdouble" in name:
        return "ld"
    if name in ("float64", "float32", "complex128", "complex64"):
        return "f8"
    return "mp"


def _rgamma_for(dtype):
    kind = _scalar_kind(dtype)
    if kind == "ld":
        from .extended import rgamma_ld

        return rgamma_ld
    if kind == "mp":
        import mpmath as mp

        return lambda x: mp.rgamma(x)
    return rgamma


def _sqrt_pi(dtype):
    kind = _scalar_kind(dtype)
    if kind == "ld":
        from .extended import SQRT_PI

        return SQRT_PI
    if kind == "mp":
        import mpmath as mp

        return mp.sqrt(mp.pi)
    return math.sqrt(math.pi)


def _pi(dtype):
    kind = _scalar_kind(dtype)
    if kind == "ld":
        from .extended import PI

        return PI
    if kind == "mp":
        import mpmath as mp

        return +mp.pi
    return math.pi


def _euler_gamma(dtype):
    kind = _scalar_kind(dtype)
    if kind == "ld":
        from .extended import EULER_GAMMA

        return EULER_GAMMA
    if kind == "mp":
        import mpmath as mp

        return +mp.euler
    return _EULER_GAMMA


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def is_integer(x: float, tol: float = INT_TOL) -> bool:
    return abs(x - round(x)) < tol


def is_half_odd(x: float, tol: float = INT_TOL) -> bool:
    """True when 2*x is an odd integer (order on the elementary path)."""
    return is_integer(2.0 * x, tol) and not is_integer(x, tol)


class BesselKind(Enum):
    I = "I"
    K = "K"


def _as_array(z):
    arr = np.asarray(z)
    if not np.issubdtype(arr.dtype, np.inexact):
        arr = arr.astype(float)
    scalar = arr.ndim == 0
    if scalar:
        arr = arr.reshape(1)
    return arr, scalar


def _ret(values, scalar):
    return values[0] if scalar else values


# ---------------------------------------------------------------------------
# itilde


def _i_series(alpha, z):
    """Ascending series sum_n (z^2/4)^n / (n! Gamma(n+alpha+1))."""
    q = 0.25 * z * z
    real_t = np.real(q).dtype.type
    c0 = real_t(_rgamma_for(np.real(q).dtype)(alpha + 1.0))
    aa = real_t(alpha)
    term = np.full_like(q, c0, dtype=q.dtype)
    total = term.copy()
    scale = np.abs(total)
    for n in range(1, _SERIES_CAP):
        nn = real_t(n)
        term = term * (q / (nn * (nn + aa)))
        total = total + term
        np.maximum(scale, np.abs(total), out=scale)
        if np.all(np.abs(term) <= _SERIES_RTOL * np.maximum(scale, 1e-300)):
            break
    return total


def bessel_i_norm(alpha: float, z):
    """Normalized I-Bessel function (z/2)**(-alpha) I_alpha(z).

    Entire and even in ``z``; accepts negative and complex arguments.
    ``alpha`` must avoid the negative integers (Gamma poles of the series).
    Real arguments beyond ~300 overflow the series terms; use
    :func:`bessel_i_norm_scaled` there.
    """
    if alpha < 0 and is_integer(alpha):
        raise ValueError(f"itilde undefined for negative integer order {alpha}")
    arr, scalar = _as_array(z)
    if not np.iscomplexobj(arr) and np.any(np.abs(arr) > 300.0):
        raise OverflowError(
            "series terms overflow for |x| > 300; use bessel_i_norm_scaled"
        )
    return _ret(_i_series(alpha, arr), scalar)


def _i_asymptotic_scaled(alpha: float, x):
    """e^{-x} itilde_alpha(x) for large real x via the Poincare expansion."""
    # I_a(x) ~ e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(alpha)/x^k
    s = np.ones_like(x)
    term = np.ones_like(x)
    best = np.full_like(x, np.inf)
    for k in range(1, 40):
        factor = (4.0 * alpha * alpha - (2 * k - 1) ** 2) / (8.0 * k)
        term = -term * factor / x
        if np.all(np.abs(term) >= best):
            break
        s = s + term
        np.minimum(best, np.abs(term), out=best)
        if np.all(np.abs(term) <= 1e-17 * np.abs(s)):
            break
    return s / np.sqrt(2.0 * math.pi * x) * (0.5 * x) ** (-alpha)


def bessel_i_norm_scaled(alpha: float, x):
    """Exponentially scaled e^{-x} itilde_alpha(x) for real x >= 0."""
    arr, scalar = _as_array(x)
    arr = arr.astype(float)
    if np.any(arr < 0):
        raise ValueError("scaled itilde takes x >= 0")
    out = np.empty_like(arr)
    small = arr <= 40.0
    if np.any(small):
        out[small] = _i_series(alpha, arr[small]) * np.exp(-arr[small])
    if np.any(~small):
        if 4.0 * alpha * alpha >= 8.0 * float(np.min(arr[~small])):
            raise ValueError("asymptotic path needs 4*alpha^2 < 8*x")
        out[~small] = _i_asymptotic_scaled(alpha, arr[~small])
    return _ret(out, scalar)


def _i_half_elementary(alpha: float, z):
    """Closed-form itilde at half-odd order, e.g. itilde_{1/2} = 2 sinh(z)/(sqrt(pi) z).

    Kept as an independent cross-check of the series path; unstable for
    small |z| at higher orders (upward recurrence), so the series is the
    production route.
    """
    if not is_half_odd(alpha):
        raise ValueError("elementary path needs half-odd order")
    m = round(alpha - 0.5)
    if m < -1:
        raise ValueError("elementary itilde implemented for order >= -1/2")
    arr, scalar = _as_array(z)
    if not np.iscomplexobj(arr):
        arr = arr.astype(float)
    rp = 1.0 / math.sqrt(math.pi)
    im1 = np.cosh(arr) * rp                       # order -1/2
    if m == -1:
        return _ret(im1, scalar)
    i0 = 2.0 * rp * np.sinh(arr) / arr            # order 1/2
    a = 0.5
    for _ in range(m):
        im1, i0 = i0, (im1 - a * i0) / (0.25 * arr * arr)
        a += 1.0
    return _ret(i0, scalar)


# ---------------------------------------------------------------------------
# ktilde


def _k_half_elementary(alpha: float, z):
    """ktilde at half-odd order via sqrt(pi) 2^m e^{-z} sum_k a_{m,k} z^{-(m+1+k)}.

    Only integer powers of z appear, so this is single-valued on C\\{0} and
    is the continuation used for negative and complex arguments.
    """
    if not is_half_odd(alpha):
        raise ValueError("elementary path needs half-odd order")
    arr, scalar = _as_array(z)
    if not np.iscomplexobj(arr):
        if np.any(arr == 0.0):
            raise ValueError("ktilde is singular at z = 0")
    if alpha < 0:
        # ktilde_{-a}(z) = (z/2)^{2a} ktilde_a(z)
        pos = _k_half_elementary(-alpha, arr)
        return _ret((0.5 * arr) ** (round(-2.0 * alpha)) * pos, scalar)
    m = round(alpha - 0.5)
    real_t = np.real(arr).dtype.type
    acc = np.zeros_like(arr)
    coeff = real_t(1)                             # a_{m,k} = (m+k)!/(k!(m-k)! 2^k)
    for k in range(m + 1):
        acc = acc + coeff * arr ** (-(m + 1 + k))
        coeff = coeff * real_t((m + k + 1) * (m - k)) / real_t(2 * (k + 1))
    pref = real_t(_sqrt_pi(np.real(arr).dtype)) * real_t(2.0**m)
    return _ret(pref * np.exp(-arr) * acc, scalar)


def _harmonic(n: int) -> float:
    return sum(1.0 / k for k in range(1, n + 1))


def _k_int_series(n: int, x):
    """ktilde at non-negative integer order n, small x, via the log series."""
    t = x.dtype.type
    q = t(0.25) * x * x
    # finite sum: 0.5 sum_{k<n} ((n-k-1)!/k!) (-1)^k (x/2)^{2k-2n}
    fin = np.zeros_like(x)
    if n > 0:
        c = t(math.factorial(n - 1))
        qk = q ** (-n)
        for k in range(n):
            fin += c * qk
            if k + 1 < n:
                c = -c / t((k + 1) * (n - k - 1))
                qk = qk * q
        fin *= t(0.5)
    logpart = t((-1.0) ** (n + 1)) * np.log(t(0.5) * x) * _i_series(float(n), x)
    # psi series: ((-1)^n/2) sum_k (psi(k+1)+psi(n+k+1))/(k!(n+k)!) q^k
    psi0 = -2 * t(_euler_gamma(x.dtype))
    for i in range(1, n + 1):
        psi0 += t(1) / t(i)
    term = np.full_like(x, t(1) / t(math.factorial(n)))
    psi = psi0
    acc = term * psi
    for k in range(1, _SERIES_CAP):
        term = term * q / t(k * (n + k))
        psi += t(1) / t(k) + t(1) / t(n + k)
        acc = acc + term * psi
        if np.all(np.abs(term) * (abs(psi) + 1.0) <= _SERIES_RTOL * np.maximum(np.abs(acc), 1e-300)):
            break
    return fin + logpart + t((-1.0) ** n) * t(0.5) * acc


def _k_reflection(alpha: float, x):
    """ktilde via pi/(2 sin a pi) [(x/2)^{-2a} itilde_{-a} - itilde_a]; small x only."""
    t = x.dtype.type
    pi = t(_pi(x.dtype))
    pref = pi / (2 * np.sin(pi * t(alpha)))
    return pref * ((t(0.5) * x) ** (-2 * t(alpha)) * _i_series(-alpha, x) - _i_series(alpha, x))


_GL24 = np.polynomial.legendre.leggauss(24)


def _panel_sum(f, edges):
    nodes, weights = _GL24
    a = edges[:-1]
    b = edges[1:]
    mid = 0.5 * (a + b)[:, None]
    half = 0.5 * (b - a)[:, None]
    t = mid + half * nodes[None, :]
    return float(np.sum(f(t) * weights[None, :] * half))


def _k_quadrature(alpha: float, x: float) -> float:
    """ktilde_alpha(x) = sqrt(pi)/Gamma(a+1/2) * int_0^inf e^{-x cosh t} sinh^{2a} t dt.

    Valid for alpha > -1/2; accurate for moderate-to-large x where the
    reflection formula cancels.  Graded panels absorb the sinh^{2a}
    endpoint; the [0, delta] remainder is added analytically.
    """
    two_a = 2.0 * alpha

    def logf(t):
        return -x * np.cosh(t) + two_a * np.log(np.sinh(t))

    # crude peak location / cutoff search
    probe = np.linspace(0.05, 3.0, 30)
    peak = float(np.max(logf(probe)))
    T = math.acosh(1.0 + 60.0 / x)
    while logf(np.array([T]))[0] > peak - 55.0:
        T *= 1.5
        if T > 60.0:
            break
    delta = T * 2.0**-48
    b0 = min(0.5, T)
    graded = [delta * 2.0**k for k in range(49) if delta * 2.0**k < b0]
    body = np.linspace(b0, T, max(2, int(math.ceil((T - b0) / 0.4)) + 1)) if T > b0 else []
    edges = np.unique(np.concatenate((graded, [b0], body, [T])))

    def f(t):
        return np.exp(-x * np.cosh(t)) * np.sinh(t) ** two_a

    body = _panel_sum(f, edges)
    endpoint = math.exp(-x) * delta ** (two_a + 1.0) / (two_a + 1.0)
    return math.sqrt(math.pi) / math.gamma(alpha + 0.5) * (body + endpoint)


def bessel_k_norm(alpha: float, x):
    """Normalized K-Bessel function (x/2)**(-alpha) K_alpha(x).

    Real x > 0 for general order.  Half-odd-integer orders additionally
    accept negative real and complex arguments (elementary closed form).
    Satisfies ktilde_{-a}(x) = (x/2)^{2a} ktilde_a(x).
    """
    if is_half_odd(alpha):
        return _k_half_elementary(alpha, x)
    arr, scalar = _as_array(x)
    if np.iscomplexobj(arr):
        raise ValueError("complex argument only supported at half-odd order")
    if np.any(arr <= 0.0):
        raise ValueError("ktilde needs x > 0 away from the elementary path")
    # long double reflection stays ahead of the double-node quadrature to larger x
    refl_max = 10.0 if np.finfo(arr.dtype).eps < 1e-18 else _K_REFLECTION_XMAX
    int_max = 10.0 if np.finfo(arr.dtype).eps < 1e-18 else _K_INTSERIES_XMAX
    if alpha < 0 and not is_integer(alpha):
        out = bessel_k_norm(-alpha, arr) * (0.5 * arr) ** (-2.0 * alpha)
        return _ret(np.asarray(out), scalar)
    if is_integer(alpha):
        n = abs(round(alpha))
        out = np.empty_like(arr)
        small = arr < int_max
        if np.any(small):
            out[small] = _k_int_series(n, arr[small])
        if np.any(~small):
            xs = arr[~small]
            out[~small] = np.array([_k_quadrature(float(n), float(v)) for v in xs]).astype(arr.dtype)
        if round(alpha) < 0:
            out *= (0.5 * arr) ** (2 * n)
        return _ret(out, scalar)
    out = np.empty_like(arr)
    small = arr < refl_max
    if np.any(small):
        out[small] = _k_reflection(alpha, arr[small])
    if np.any(~small):
        out[~small] = np.array([_k_quadrature(alpha, float(v)) for v in arr[~small]]).astype(arr.dtype)
    return _ret(out, scalar)


# ---------------------------------------------------------------------------
# J-Bessel (Hankel reduction of the transform kernel)


def bessel_j(nu: float, z):
    """J-Bessel power series sum_k (-1)^k (z/2)^{nu+2k} / (k! Gamma(nu+k+1))."""
    arr, scalar = _as_array(z)
    arr = arr.astype(float)
    q = 0.25 * arr * arr
    term = np.full_like(arr, rgamma(nu + 1.0))
    total = term.copy()
    for k in range(1, _SERIES_CAP):
        term = -term * q / (k * (k + nu))
        total = total + term
        if np.all(np.abs(term) <= _SERIES_RTOL * np.maximum(np.abs(total), 1e-300)):
            break
    return _ret(total * (0.5 * arr) ** nu, scalar)


# ---------------------------------------------------------------------------
# Laguerre polynomials


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("laguerre needs n >= 0")
    arr, scalar = _as_array(x)
    t = arr.dtype.type
    prev = np.ones_like(arr)
    if n == 0:
        return _ret(prev, scalar)
    aa = t(alpha)
    cur = aa + t(1) - arr
    for k in range(1, n):
        prev, cur = cur, ((t(2 * k + 1) + aa - arr) * cur - (t(k) + aa) * prev) / t(k + 1)
    return _ret(cur, scalar)


def laguerre_sum(n: int, alpha: float, x):
    """L_n^alpha(x) from the defining binomial sum; test oracle only."""
    arr, scalar = _as_array(x)
    arr = arr.astype(float)
    total = np.zeros_like(arr)
    for k in range(n + 1):
        binom = 1.0
        for i in range(1, n - k + 1):
            binom *= (alpha + k + i) / i
        total = total + (-1.0) ** k / math.factorial(k) * binom * arr**k
    return _ret(total, scalar)


# ---------------------------------------------------------------------------
# derivative ladders


@dataclass(frozen=True)
class BesselLadder:
    """Values B_{base+m}(x), m = 0..M, for one normalized Bessel kind.

    Supplies exact differentiation d/dx B_a = +/-(x/2) B_{a+1} to the
    structured-function algebra.
    """

    kind: BesselKind
    base_order: float
    x: object
    values: object  # ndarray, shape (M+1,) + shape(x)

    def __len__(self) -> int:
        return len(self.values)


def bessel_ladder(kind: BesselKind, base_order: float, x, M: int) -> BesselLadder:
    """Evaluate B_{base+m}(x) for m = 0..M with a stable per-kind strategy."""
    if M < 0:
        raise ValueError("ladder needs M >= 0")
    arr, _ = _as_array(x)
    if kind is BesselKind.I:
        vals = np.array([np.atleast_1d(bessel_i_norm(base_order + m, arr)) for m in range(M + 1)])
        return BesselLadder(kind, base_order, arr, vals)
    if is_half_odd(base_order):
        vals = np.array([np.atleast_1d(_k_half_elementary(base_order + m, arr)) for m in range(M + 1)])
        return BesselLadder(kind, base_order, arr, vals)
    if is_integer(base_order) and round(base_order) >= 0:
        n0 = round(base_order)
        k0 = np.atleast_1d(bessel_k_norm(0.0, arr))
        k1 = np.atleast_1d(bessel_k_norm(1.0, arr))
        ladder = [k0, k1]
        q = 0.25 * arr * arr
        for n in range(1, n0 + M):
            ladder.append((n * ladder[n] + ladder[n - 1]) / q)
        vals = np.array(ladder[n0 : n0 + M + 1])
        return BesselLadder(kind, base_order, arr, vals)
    vals = np.array([np.atleast_1d(bessel_k_norm(base_order + m, arr)) for m in range(M + 1)])
    return BesselLadder(kind, base_order, arr, vals)
