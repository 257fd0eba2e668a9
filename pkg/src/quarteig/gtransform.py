"""The G-function kernel, the unitary transform it generates, and checks.

The kernel is the (2,0;0,4) Meijer function at parameters
(0, -nu/2, -mu/2, -(mu+nu)/2).  For odd nu the two "numerator" parameters
0 and -nu/2 are separated by a non-integer, and the kernel is the sum of
the two residue series

    G(t) = sum_{h in {1,2}} Gamma(b_h' - b_h)
           / (Gamma(1+b_h-b_3) Gamma(1+b_h-b_4)) * t^{b_h}
           * 0F3(; 1+b_h-b_h', 1+b_h-b_3, 1+b_h-b_4; t)

(h' the other of the pair), each of which satisfies the kernel equation

    theta (theta + mu/2)(theta + nu/2)(theta + (mu+nu)/2) u = t u

termwise.  At nu = -1 the kernel collapses to t^(-mu/4) J_mu(4 t^(1/4))
and the transform becomes a Hankel transform.

The transform itself is

    T f(x) = 2^-(mu+nu+1) integral_0^inf G((x y/4)^2) f(y) y^(mu+nu+1) dy,

a unitary involution whose eigenfunctions are the L2 family with
eigenvalues (-1)^j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .params import ParamSet
from .quadrature import QuadratureResult, integrate_halfline
from .specfun import bessel_i_norm, bessel_j, bessel_k_norm, gamma, is_integer

__all__ = [
    "KernelMode",
    "KernelSpec",
    "bessel_transform_identity",
    "g_transform",
    "kernel_ode_residual",
    "meijer_kernel",
]

#: Largest kernel argument the residue series evaluate without losing more
#: than ~half the mantissa to inter-branch cancellation (~exp(4 t^(1/4))).
KERNEL_T_MAX = 2500.0

_SERIES_CAP = 400


class KernelMode(Enum):
    HYPERGEOMETRIC_PAIR = "hypergeometric_pair"
    HANKEL_REDUCTION = "hankel_reduction"


@dataclass(frozen=True)
class KernelSpec:
    mu: float
    nu: float
    mode: KernelMode = KernelMode.HYPERGEOMETRIC_PAIR

    def __post_init__(self):
        if self.mode is KernelMode.HANKEL_REDUCTION:
            if self.nu != -1.0:
                raise ValueError("the Hankel reduction is the nu = -1 kernel")
        else:
            if is_integer(0.5 * self.nu):
                raise ValueError(
                    "even nu/2 splits logarithmically; the residue-pair kernel "
                    "needs nu/2 off the integers (odd integer nu qualifies)"
                )


def kernel_for(p: ParamSet) -> KernelSpec:
    """Pick the natural kernel mode for a parameter set."""
    if p.nu == -1.0:
        return KernelSpec(p.mu, p.nu, KernelMode.HANKEL_REDUCTION)
    return KernelSpec(p.mu, p.nu, KernelMode.HYPERGEOMETRIC_PAIR)


def _branch_parameters(mu: float, nu: float):
    """(prefactor, exponent, (c1, c2, c3)) for the two residue branches."""
    b = (0.0, -0.5 * nu, -0.5 * mu, -0.5 * (mu + nu))
    out = []
    for h, hp in ((0, 1), (1, 0)):
        pref = gamma(b[hp] - b[h]) / (
            gamma(1.0 + b[h] - b[2]) * gamma(1.0 + b[h] - b[3])
        )
        lower = (1.0 + b[h] - b[hp], 1.0 + b[h] - b[2], 1.0 + b[h] - b[3])
        out.append((pref, b[h], lower))
    return out


def _hyp0f3(lower, t):
    """0F3(; c1, c2, c3; t) for t >= 0 (positive terms, fast factorial decay)."""
    c1, c2, c3 = lower
    term = np.ones_like(t)
    total = np.ones_like(t)
    for k in range(_SERIES_CAP):
        term = term * t / ((k + 1.0) * (c1 + k) * (c2 + k) * (c3 + k))
        total = total + term
        if np.all(np.abs(term) <= 1e-16 * np.abs(total)):
            break
    else:
        raise ArithmeticError("0F3 series exhausted its term budget")
    return total


def meijer_kernel(spec: KernelSpec, t):
    """Kernel value at argument t > 0 (scalar or array)."""
    arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(arr <= 0.0):
        raise ValueError("kernel argument must be positive")
    if np.any(arr > KERNEL_T_MAX):
        raise ValueError(
            f"kernel argument beyond {KERNEL_T_MAX}: the residue series has "
            "lost too many digits to cancellation"
        )
    if spec.mode is KernelMode.HANKEL_REDUCTION:
        out = arr ** (-0.25 * spec.mu) * bessel_j(spec.mu, 4.0 * arr**0.25)
    else:
        out = np.zeros_like(arr)
        for pref, expo, lower in _branch_parameters(spec.mu, spec.nu):
            out = out + pref * arr**expo * _hyp0f3(lower, arr)
    return out[0] if np.asarray(t).ndim == 0 else out


def kernel_ode_residual(spec: KernelSpec, t: float) -> float:
    """Relative residual of  theta(theta+mu/2)(theta+nu/2)(theta+(mu+nu)/2)u = t u
    with the theta-derivatives applied termwise to the residue series."""
    if spec.mode is not KernelMode.HYPERGEOMETRIC_PAIR:
        raise ValueError("the ODE check applies to the residue-series mode")
    t = float(t)
    b = (0.0, -0.5 * spec.nu, -0.5 * spec.mu, -0.5 * (spec.mu + spec.nu))
    lhs = 0.0
    rhs = 0.0
    for pref, expo, lower in _branch_parameters(spec.mu, spec.nu):
        term = pref * t**expo
        for k in range(_SERIES_CAP):
            s = expo + k
            lhs += term * (s - b[0]) * (s - b[1]) * (s - b[2]) * (s - b[3])
            rhs += term * t
            new = term * t / ((k + 1.0) * (lower[0] + k) * (lower[1] + k) * (lower[2] + k))
            if abs(new) <= 1e-18 * max(abs(rhs), 1e-300) and k > 2:
                break
            term = new
    return abs(lhs - rhs) / max(abs(rhs), 1e-300)


def g_transform(p: ParamSet, f, x: float, tol: float, decay: float = 1.0) -> QuadratureResult:
    """T f(x) = 2^-(mu+nu+1) integral_0^inf G((x y/4)^2) f(y) y^(mu+nu+1) dy.

    ``f`` must be vectorized and exponentially decaying at the declared
    rate.  The cutoff keeps the kernel argument within its series budget;
    if the tail bound cannot reach tol/10 under that cap the result is
    flagged unconverged.
    """
    spec = kernel_for(p)
    scale = 2.0 ** (-(p.mu + p.nu + 1.0))

    def integrand(y):
        return meijer_kernel(spec, (x * y / 4.0) ** 2) * np.asarray(f(y))

    y_cap = 4.0 * (0.995 * KERNEL_T_MAX) ** 0.5 / x
    res = integrate_halfline(
        integrand, p.mu + p.nu + 1.0, tol / scale, decay=decay, x_max=y_cap
    )
    return QuadratureResult(
        scale * res.value,
        scale * res.abs_error_estimate,
        res.nodes_used,
        res.converged,
    )


def bessel_transform_identity(
    p: ParamSet, alpha: float, x: float, tol: float
) -> tuple[float, float]:
    """Both sides of the kernel/Bessel product identity.

    lhs = integral_0^inf G((x y/4)^2) I_{mu/2}((alpha-1) y) K_{nu/2}(alpha y)
          y^(mu+nu+1) dy
    rhs = 2^(mu+nu+1) (beta/alpha)^((mu+nu+2)/2) I_{mu/2}((beta-1) x)
          K_{nu/2}(beta x),          beta = alpha/(2 alpha - 1)

    (the constant follows from applying the transform to the generating
    function at t = (alpha-1)/alpha, where T G(t, .) = G(-t, .)).
    """
    if alpha <= 0.5:
        raise ValueError("identity needs alpha > 1/2")
    beta = alpha / (2.0 * alpha - 1.0)

    def fprod(y):
        return bessel_i_norm(0.5 * p.mu, (alpha - 1.0) * y) * bessel_k_norm(
            0.5 * p.nu, alpha * y
        )

    res = g_transform(p, fprod, x, tol * 2.0 ** (-(p.mu + p.nu + 1.0)), decay=1.0)
    lhs = res.value * 2.0 ** (p.mu + p.nu + 1.0)
    rhs = (
        2.0 ** (p.mu + p.nu + 1.0)
        * (beta / alpha) ** (0.5 * (p.mu + p.nu + 2.0))
        * bessel_i_norm(0.5 * p.mu, (beta - 1.0) * x)
        * bessel_k_norm(0.5 * p.nu, beta * x)
    )
    return lhs, float(rhs)
