"""Half-line weighted integrals and the 2-D integral representations.

Composite Gauss-Legendre panels with dyadic subdivision toward the
endpoints (integrands carry algebraic behavior like x^(-nu) against the
weight), an embedded lower-order estimate driving adaptive refinement,
and an analytic exponential tail bound deciding the half-line cutoff.
Double integrals run as iterated rules with the inner axis a fixed graded
rule and the accuracy estimated against a coarser node count.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .generating import eigenfunction
from .params import ParamSet
from .specfun import bessel_ladder, gamma, laguerre
from .structure import BesselSum, Eigenfunction

__all__ = [
    "QuadratureResult",
    "inner_product",
    "integral_rep",
    "integrate_halfline",
    "integrate_interval",
    "gram_matrix",
    "pair_product",
]

_GL_HI = np.polynomial.legendre.leggauss(32)
_GL_LO = np.polynomial.legendre.leggauss(16)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    nodes_used: int
    converged: bool


def _panel_batch(f, a, b):
    """Evaluate panels [a_i, b_i] with the 32-point rule and its embedded
    16-point error estimate; one vectorized integrand call."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    mid = 0.5 * (a + b)[:, None]
    half = 0.5 * (b - a)[:, None]
    xs = np.concatenate(
        (mid + half * _GL_HI[0][None, :], mid + half * _GL_LO[0][None, :]), axis=1
    )
    ys = np.asarray(f(xs.ravel()), dtype=float).reshape(xs.shape)
    hi = (ys[:, :32] @ _GL_HI[1]) * half[:, 0]
    lo = (ys[:, 32:] @ _GL_LO[1]) * half[:, 0]
    return hi, np.abs(hi - lo)


def integrate_interval(f, edges, tol: float, max_panels: int = 4000) -> QuadratureResult:
    """Adaptive composite integration of a vectorized f over given edges."""
    edges = np.asarray(edges, dtype=float)
    a, b = edges[:-1], edges[1:]
    vals, errs = _panel_batch(f, a, b)
    nodes = 48 * len(a)
    heap = []
    panels = {}
    for i in range(len(a)):
        panels[i] = (a[i], b[i], vals[i], errs[i])
        heapq.heappush(heap, (-errs[i], i))
    next_id = len(a)
    span = edges[-1] - edges[0]
    frozen_val = 0.0
    frozen_err = 0.0
    while heap and len(panels) < max_panels:
        live_err = sum(p[3] for p in panels.values())
        if live_err + frozen_err <= tol:
            break
        _, i = heapq.heappop(heap)
        if i not in panels:
            continue
        pa, pb, pv, perr = panels.pop(i)
        if pb - pa < 1e-14 * span:
            frozen_val += pv
            frozen_err += perr
            continue
        m = 0.5 * (pa + pb)
        v2, e2 = _panel_batch(f, [pa, m], [m, pb])
        nodes += 96
        for k in range(2):
            panels[next_id] = ([pa, m][k], [m, pb][k], v2[k], e2[k])
            heapq.heappush(heap, (-e2[k], next_id))
            next_id += 1
    err = float(sum(p[3] for p in panels.values())) + frozen_err
    val = float(sum(p[2] for p in panels.values())) + frozen_val
    return QuadratureResult(val, err, nodes, err <= tol)


def _graded_edges(a: float, b: float, levels: int, toward: str = "left"):
    """Edges grading dyadically toward one endpoint of [a, b]."""
    w = b - a
    ks = [w * 2.0 ** (-k) for k in range(levels, 0, -1)]
    if toward == "left":
        return np.concatenate(([a], a + np.asarray(ks), [b]))
    return np.concatenate(([a], b - np.asarray(ks)[::-1], [b]))


def integrate_halfline(
    f,
    weight_exp: float,
    tol: float,
    decay: float = 1.0,
    x_max: float = 800.0,
    max_panels: int = 4000,
) -> QuadratureResult:
    """integral_0^infinity f(x) x^weight_exp dx for exponentially decaying f.

    ``decay`` declares the bound |f(x)| <= C e^(-decay x) used to place the
    cutoff so the analytic tail bound stays below tol/10; the bound enters
    the reported error estimate.  Dyadic panels toward 0 absorb algebraic
    endpoint behavior.
    """
    if decay <= 0:
        raise ValueError("decay must be positive (declared exponential bound)")

    def g(x):
        return np.asarray(f(x)) * x**weight_exp

    x_cut = max(10.0 / decay, 2.0 * max(weight_exp, 0.0) / decay + 5.0, 4.0)
    x_cut = min(x_cut, x_max)
    tail = math.inf
    while True:
        probes = np.abs(
            g(np.array([max(x_cut - 1.1 / decay, 0.5 * x_cut), max(x_cut - 0.4 / decay, 0.75 * x_cut), x_cut]))
        )
        tail = float(np.max(probes)) * 3.0 / decay
        if tail <= 0.1 * tol or x_cut >= x_max:
            break
        x_cut = min(1.4 * x_cut, x_max)
    edges = _graded_edges(0.0, x_cut, levels=26, toward="left")
    res = integrate_interval(g, edges, 0.8 * tol, max_panels=max_panels)
    est = res.abs_error_estimate + tail
    return QuadratureResult(res.value, est, res.nodes_used + 3, est <= tol)


# ---------------------------------------------------------------------------
# weighted inner products of structured functions


def _as_fn(f):
    if isinstance(f, Eigenfunction):
        return f.fn
    return f


def pair_product(f, g):
    """Vectorized x -> f(x) g(x) with one shared Bessel ladder when both
    factors live on the same ladder."""
    f, g = _as_fn(f), _as_fn(g)
    if (
        isinstance(f, BesselSum)
        and isinstance(g, BesselSum)
        and f.kind is g.kind
        and f.beta == g.beta
    ):
        depth = max(f.max_ladder, g.max_ladder)

        def prod(x):
            ladder = bessel_ladder(f.kind, f.beta, x, depth)
            return f.evaluate(x, ladder=ladder) * g.evaluate(x, ladder=ladder)

        return prod
    fe = f.evaluate if isinstance(f, BesselSum) else f
    ge = g.evaluate if isinstance(g, BesselSum) else g
    return lambda x: fe(x) * ge(x)


def inner_product(p: ParamSet, f, g, tol: float, decay: float = 2.0) -> QuadratureResult:
    """Weighted inner product  integral_0^inf f g x^(mu+nu+1) dx."""
    return integrate_halfline(pair_product(f, g), p.mu + p.nu + 1.0, tol, decay=decay)


def gram_matrix(p: ParamSet, j_max: int, tol: float):
    """Gram matrix of the L2 family up to j_max under the canonical weight."""
    fns = [eigenfunction(2, j, p) for j in range(j_max + 1)]
    n = j_max + 1
    g = np.zeros((n, n))
    for j in range(n):
        for k in range(j, n):
            g[j, k] = g[k, j] = inner_product(p, fns[j], fns[k], tol).value
    return g


# ---------------------------------------------------------------------------
# integral representations


def _theta_rule(mu: float, nu_or_none: float | None, levels: int, n_nodes: int):
    """Graded panel rule on [0, pi] for sin^mu(theta)-type endpoints."""
    left = _graded_edges(0.0, 0.5 * math.pi, levels, toward="left")
    right = _graded_edges(0.5 * math.pi, math.pi, levels, toward="right")
    edges = np.concatenate((left, right[1:]))
    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    a, b = edges[:-1], edges[1:]
    mid = 0.5 * (a + b)[:, None]
    half = 0.5 * (b - a)[:, None]
    xs = (mid + half * nodes[None, :]).ravel()
    ws = (np.broadcast_to(weights[None, :], (len(a), n_nodes)) * half).ravel()
    return xs, ws


def _phi_halfline_rule(x: float, extra: float, levels: int, n_nodes: int):
    """Graded rule on [0, Phi] for e^{-x cosh phi} sinh^nu phi integrands."""
    phi_cut = math.acosh(1.0 + (55.0 + extra) / x)
    edges = _graded_edges(0.0, phi_cut, levels, toward="left")
    # keep body panels at moderate width for the cosh curvature
    body = np.arange(edges[1], phi_cut, 0.4)
    edges = np.unique(np.concatenate((edges, body)))
    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    a, b = edges[:-1], edges[1:]
    mid = 0.5 * (a + b)[:, None]
    half = 0.5 * (b - a)[:, None]
    xs = (mid + half * nodes[None, :]).ravel()
    ws = (np.broadcast_to(weights[None, :], (len(a), n_nodes)) * half).ravel()
    return xs, ws


def _tensor_value(integrand, rx, rw, cx, cw):
    vals = integrand(rx[:, None], cx[None, :])
    return float(rw @ vals @ cw)


def integral_rep(i: int, p: ParamSet, j: int, x: float, tol: float) -> QuadratureResult:
    """Double-integral representation of the i = 1, 2 eigenfunctions.

    i = 1:  c1 int_0^pi int_0^pi  e^{-x cos phi} L_j(x(cos t + cos phi)) sin^mu t sin^nu phi
    i = 2:  c2 int_0^pi int_0^inf e^{-x cosh phi} L_j(x(cos t + cosh phi)) sin^mu t sinh^nu phi

    with Laguerre order (mu+nu)/2 and constants 1/(pi G((mu+1)/2) G((nu+1)/2)),
    resp. 1/(G((mu+1)/2) G((nu+1)/2)).  At nu = -1 the phi integral collapses
    to the boundary values and the single-integral forms are used.
    """
    if i not in (1, 2):
        raise ValueError("integral representations cover i = 1, 2")
    mu, nu = p.mu, p.nu
    if nu == -1.0:
        return _integral_rep_nu_m1(i, p, j, x, tol)
    if mu <= -1 or nu <= -1:
        raise ValueError("representation needs mu, nu > -1")
    alpha = 0.5 * (mu + nu)
    if i == 1:
        const = 1.0 / (math.pi * gamma(0.5 * (mu + 1.0)) * gamma(0.5 * (nu + 1.0)))

        def integrand(t, phi):
            return (
                np.exp(-x * np.cos(phi))
                * laguerre(j, alpha, x * (np.cos(t) + np.cos(phi)))
                * np.sin(t) ** mu
                * np.sin(phi) ** nu
            )

        def run(levels, n_nodes):
            tx, tw = _theta_rule(mu, None, levels, n_nodes)
            px, pw = _theta_rule(nu, None, levels, n_nodes)
            return _tensor_value(integrand, tx, tw, px, pw), len(tx) * len(px)

    else:
        const = 1.0 / (gamma(0.5 * (mu + 1.0)) * gamma(0.5 * (nu + 1.0)))

        def integrand(t, phi):
            return (
                np.exp(-x * np.cosh(phi))
                * laguerre(j, alpha, x * (np.cos(t) + np.cosh(phi)))
                * np.sin(t) ** mu
                * np.sinh(phi) ** nu
            )

        def run(levels, n_nodes):
            tx, tw = _theta_rule(mu, None, levels, n_nodes)
            px, pw = _phi_halfline_rule(x, 8.0 * j + 4.0 * abs(nu), levels, n_nodes)
            return _tensor_value(integrand, tx, tw, px, pw), len(tx) * len(px)

    coarse, _ = run(14, 16)
    fine, nodes = run(18, 24)
    err = abs(fine - coarse) * abs(const)
    return QuadratureResult(const * fine, err, nodes, err <= tol)


def _integral_rep_nu_m1(i: int, p: ParamSet, j: int, x: float, tol: float) -> QuadratureResult:
    mu = p.mu
    alpha = 0.5 * (mu - 1.0)

    if i == 2:
        const = 1.0 / (2.0 * gamma(0.5 * (mu + 1.0)))

        def f(t):
            return math.exp(-x) * laguerre(j, alpha, x * (np.cos(t) + 1.0)) * np.sin(t) ** mu

    else:
        const = 1.0 / (2.0 * math.pi * gamma(0.5 * (mu + 1.0)))

        def f(t):
            out = np.zeros_like(t)
            for sgn in (1.0, -1.0):
                out = out + math.exp(-sgn * x) * laguerre(
                    j, alpha, x * (np.cos(t) + sgn)
                ) * np.sin(t) ** mu
            return out

    edges = np.concatenate(
        (_graded_edges(0.0, 0.5 * math.pi, 18, "left"),
         _graded_edges(0.5 * math.pi, math.pi, 18, "right")[1:])
    )
    res = integrate_interval(f, edges, tol / max(abs(const), 1e-300))
    return QuadratureResult(
        const * res.value, abs(const) * res.abs_error_estimate, res.nodes_used, res.converged
    )
