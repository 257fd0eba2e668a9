"""Coefficient extraction from the four generating functions.

Each family is a product of three factors in the expansion variable t:

    G_i(t, x) = (1-t)^(-(mu+nu+2)/2) * B1_{mu/2}(t x/(1-t)) * B2_{nu/2}(x/(1-t))

with (B1, B2) = (I, I), (I, K), (K, I), (K, K) for i = 1..4 in normalized
Bessel kinds.  The expansion runs over a truncated series whose
coefficients live in the structured algebra:

* prefactor: scalar binomial series;
* first factor, I-kind: the entire series in the squared argument, each
  (t/(1-t))^{2m} expanded binomially -- contributes x^{2m} monomials;
* first factor, K-kind (odd mu only): the elementary half-integer closed
  form e^{-w} x Laurent polynomial in w, with e^{-t x/(1-t)} expanded
  through the Laguerre generating function -- contributes Laurent
  monomials down to x^{-mu} and makes the series a Laurent series with
  offset -mu;
* second factor: Taylor expansion B2(x + s) in s = x t/(1-t), with the
  derivatives supplied exactly by the Bessel ladder.

The t^j coefficient of the product is the structured representation of
the j-th eigenfunction.  ``g_value`` evaluates G_i directly (real or
complex t) and is the basis of the independent coefficient oracles.
"""

from __future__ import annotations

import math

import numpy as np

from .laurent import LaurentPoly
from .params import ParamSet, SolutionKind
from .series import TruncatedSeries, binomial_series
from .specfun import (
    BesselKind,
    _rgamma_for,
    _sqrt_pi,
    bessel_i_norm,
    bessel_k_norm,
    is_half_odd,
    is_integer,
)
from .structure import BesselSum, Eigenfunction

__all__ = [
    "eigenfunction",
    "expand_generating",
    "exp_gen_series",
    "g_value",
    "MAX_ORDER",
]

#: Cost guard on the truncation order of an expansion.
MAX_ORDER = 64

_GUARD_TERMS = 2


def _kinds(i: SolutionKind) -> tuple[BesselKind, BesselKind]:
    return BesselKind(i.mu_kind), BesselKind(i.nu_kind)


def _check_params(i: SolutionKind, p: ParamSet):
    if i.i in (3, 4):
        if not p.ic2:
            raise ValueError(
                "families i = 3, 4 need an odd integer mu >= 1 "
                "(the first factor is meromorphic at t = 0 only then)"
            )
    else:
        if is_integer(p.mu) and round(p.mu) <= -2:
            raise ValueError("mu in {-2, -3, ...} hits Gamma poles of the entire factor")


# ---------------------------------------------------------------------------
# the three factor series


def _prefactor(p: ParamSet, order: int, dtype=float) -> TruncatedSeries:
    alpha = (dtype(p.mu) + dtype(p.nu) + dtype(2)) / dtype(2)
    return binomial_series(alpha, order, dtype)


def _mu_part_entire(p: ParamSet, order: int, dtype=float) -> TruncatedSeries:
    """I_{mu/2}(t x/(1-t)) expanded in t; coefficients are even polynomials."""
    out = TruncatedSeries.zeros(0, order)
    import numpy as np

    c = dtype(_rgamma_for(np.dtype(dtype))(0.5 * p.mu + 1.0))
    half_mu = dtype(p.mu) / dtype(2)
    for m in range(order // 2 + 1):
        if m > 0:
            c = c / (dtype(4 * m) * (dtype(m) + half_mu))
        elem = LaurentPoly.monomial(2 * m, c)
        series = binomial_series(2.0 * m, order - 2 * m, dtype).shift_t(2 * m)
        out = out.add(series.scale(elem))
    return out


def exp_gen_series(order: int, dtype=float) -> TruncatedSeries:
    """e^{-t x/(1-t)} as a series with polynomial coefficients.

    By the Laguerre generating function the t^n coefficient is
    L_n(x) - L_{n-1}(x) (order-0 Laguerre polynomials).
    """
    one = dtype(1)
    lm1 = LaurentPoly.zero()
    lcur = LaurentPoly({0: one})
    coeffs = [lcur]
    for n in range(1, order + 1):
        step = LaurentPoly({0: dtype(2 * n - 1), 1: -one})
        lnext = (step * lcur - dtype(n - 1) * lm1) * (one / dtype(n))
        coeffs.append(lnext - lcur)
        lm1, lcur = lcur, lnext
    return TruncatedSeries(0, coeffs, order)


def _mu_part_meromorphic(p: ParamSet, order: int, dtype=float) -> TruncatedSeries:
    """K_{mu/2}(t x/(1-t)) for odd mu: elementary form times the e^{-w} series."""
    import numpy as np

    m = (round(p.mu) - 1) // 2
    mu = round(p.mu)
    pref = dtype(_sqrt_pi(np.dtype(dtype))) * dtype(2**m)
    terms: dict[int, LaurentPoly] = {}
    a = dtype(1)  # a_{m,k} = (m+k)!/(k!(m-k)! 2^k)
    for k in range(m + 1):
        q = m + 1 + k
        binom = dtype(1)
        for idx in range(q + 1):
            tpow = idx - q
            c = pref * a * binom * dtype((-1.0) ** idx)
            mono = LaurentPoly.monomial(-q, c)
            terms[tpow] = terms[tpow] + mono if tpow in terms else mono
            binom = binom * dtype(q - idx) / dtype(idx + 1)
        a = a * dtype((m + k + 1) * (m - k)) / dtype(2 * (k + 1))
    laurent_factor = TruncatedSeries.from_terms(terms, order)
    return laurent_factor.mul(exp_gen_series(order + mu, dtype))


def _nu_part(i: SolutionKind, p: ParamSet, order: int, dtype=float) -> TruncatedSeries:
    """B2_{nu/2}(x/(1-t)) = B2(x + s), Taylor in s = x t/(1-t)."""
    kind = _kinds(i)[1]
    one = dtype(1)
    deriv = BesselSum(kind, 0.5 * p.nu, {0: LaurentPoly({0: one})})
    out = TruncatedSeries.zeros(0, order)
    rfact = one
    for r in range(order + 1):
        if r > 0:
            deriv = deriv.ddx()
            rfact = rfact * dtype(r)
        elem = deriv.mul_xpow(r) * (one / rfact)
        series = binomial_series(float(r), order - r, dtype).shift_t(r)
        out = out.add(series.scale(elem))
    return out


# ---------------------------------------------------------------------------
# expansion and eigenfunction construction


def expand_generating(i, p: ParamSet, order: int, dtype=float) -> TruncatedSeries:
    """Series whose t^j coefficient is the structured eigenfunction j.

    For i = 1, 2 the series starts at t^0; for i = 3, 4 it is a Laurent
    series with offset -mu.  ``order`` beyond 64 is rejected (cost guard).
    ``dtype=numpy.longdouble`` builds the coefficients in extended
    precision (verify-grade runs).
    """
    i = i if isinstance(i, SolutionKind) else SolutionKind(i)
    if order < 0:
        raise ValueError("order must be >= 0")
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds the cost guard {MAX_ORDER}")
    _check_params(i, p)
    shift = round(p.mu) if i.i in (3, 4) else 0
    pre = _prefactor(p, order + shift, dtype)
    nu_series = _nu_part(i, p, order + shift, dtype)
    if i.i in (1, 2):
        mu_series = _mu_part_entire(p, order, dtype)
        out = pre.mul(mu_series).mul(nu_series)
    else:
        mu_series = _mu_part_meromorphic(p, order, dtype)
        out = pre.mul(mu_series).mul(nu_series)
    if out.order < order:
        raise AssertionError("internal truncation bookkeeping lost requested order")
    return out.truncate(order)


_CACHE: dict[tuple, TruncatedSeries] = {}


def _cached_expansion(i: SolutionKind, p: ParamSet, j: int, dtype=float) -> TruncatedSeries:
    key = (i.i, p.mu, p.nu, dtype.__name__)
    need = max(j, 0) + _GUARD_TERMS
    series = _CACHE.get(key)
    if series is None or series.order < need:
        series = expand_generating(i, p, need, dtype)
        _CACHE[key] = series
    return series


def eigenfunction(i, j: int, p: ParamSet, dtype=float) -> Eigenfunction:
    """Structured representation of the (i, j) eigenfunction.

    Indices below the vanishing bound (j < 0 for i = 1, 2; j < -mu for
    i = 3, 4) give the exact zero function.
    """
    i = i if isinstance(i, SolutionKind) else SolutionKind(i)
    _check_params(i, p)
    kind = _kinds(i)[1]
    lower = 0 if i.i in (1, 2) else -round(p.mu)
    if j < lower:
        return Eigenfunction(i.i, j, p, BesselSum.zero(kind, 0.5 * p.nu))
    series = _cached_expansion(i, p, j, dtype)
    return Eigenfunction(i.i, j, p, series[j])


# ---------------------------------------------------------------------------
# direct evaluation of the generating functions


def _bessel_value(kind: BesselKind, alpha: float, z):
    if kind is BesselKind.I:
        return bessel_i_norm(alpha, z)
    return bessel_k_norm(alpha, z)


def g_value(i, p: ParamSet, t, x: float):
    """G_i(t, x) evaluated directly; t may be real or complex, |t| < 1.

    Complex t requires the K-factors to sit at half-odd order (odd
    integer parameter), i.e. the elementary path.
    """
    i = i if isinstance(i, SolutionKind) else SolutionKind(i)
    _check_params(i, p)
    tarr = np.asarray(t)
    if np.any(np.abs(tarr) >= 1.0):
        raise ValueError("generating functions expand about t = 0; need |t| < 1")
    kmu, knu = _kinds(i)
    if np.iscomplexobj(tarr):
        if kmu is BesselKind.K and not is_half_odd(0.5 * p.mu):
            raise ValueError("complex t needs odd mu for the K first factor")
        if knu is BesselKind.K and not is_half_odd(0.5 * p.nu):
            raise ValueError("complex t needs odd nu for the K second factor")
    om = 1.0 - tarr
    pref = om ** (-0.5 * (p.mu + p.nu + 2.0))
    b1 = _bessel_value(kmu, 0.5 * p.mu, tarr * x / om)
    b2 = _bessel_value(knu, 0.5 * p.nu, x / om)
    return pref * b1 * b2
