"""Parameter domain and every scalar formula with no function evaluation.

Holds the (mu, nu) classification, eigenvalues, L2-norm constants, parity
coefficients, leading small-x asymptotic data and the five-term recurrence
constants.  All pure functions of the parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import gamma, is_integer, pochhammer, rgamma

__all__ = [
    "FiveTermConstants",
    "ParamSet",
    "SolutionKind",
    "eigenvalue",
    "eigenvalue_casimir",
    "five_term_constants",
    "leading_asymptotic",
    "norm_sq",
    "parity_coefficients",
    "parity_matrix",
]


@dataclass(frozen=True)
class ParamSet:
    """The parameter pair (mu, nu) with its validity classification.

    ``ic1``: mu, nu integers with mu >= nu >= -1 of the same parity, not
    both -1 (the L2-theory condition).  ``ic2``: mu an odd integer >= 1
    (meromorphy of the i = 3, 4 generating functions at t = 0).
    """

    mu: float
    nu: float
    ic1: bool
    ic2: bool

    @classmethod
    def classify(cls, mu: float, nu: float) -> "ParamSet":
        ints = is_integer(mu) and is_integer(nu)
        ic1 = False
        if ints:
            m, n = round(mu), round(nu)
            ic1 = (
                m >= n >= -1
                and (m - n) % 2 == 0
                and not (m == -1 and n == -1)
            )
        ic2 = is_integer(mu) and round(mu) >= 1 and round(mu) % 2 == 1
        return cls(float(mu), float(nu), ic1, ic2)


def params(mu: float, nu: float) -> ParamSet:
    return ParamSet.classify(mu, nu)


@dataclass(frozen=True)
class SolutionKind:
    """Which of the four solution families, with its sign signatures.

    delta = +1 for i = 1, 2 (entire first factor), -1 for i = 3, 4;
    epsilon = +1 for i = 1, 3 (entire second factor), -1 for i = 2, 4.
    """

    i: int

    def __post_init__(self):
        if self.i not in (1, 2, 3, 4):
            raise ValueError(f"solution index must be 1..4, got {self.i}")

    @property
    def delta(self) -> int:
        return 1 if self.i in (1, 2) else -1

    @property
    def epsilon(self) -> int:
        return 1 if self.i in (1, 3) else -1

    @property
    def mu_kind(self) -> str:
        return "I" if self.i in (1, 2) else "K"

    @property
    def nu_kind(self) -> str:
        return "I" if self.i in (1, 3) else "K"


def eigenvalue(p: ParamSet, j: int) -> float:
    """Eigenvalue (2j+mu+1)^2 - (mu+1)^2/2 - (nu+1)^2/2 of the operator."""
    return (2.0 * j + p.mu + 1.0) ** 2 - 0.5 * (p.mu + 1.0) ** 2 - 0.5 * (p.nu + 1.0) ** 2


def eigenvalue_casimir(p: ParamSet, j: int) -> float:
    """Same eigenvalue in the form 2j(j+mu+1) + 2(j+(mu-nu)/2)(j+(mu+nu+2)/2)."""
    return 2.0 * j * (j + p.mu + 1.0) + 2.0 * (j + 0.5 * (p.mu - p.nu)) * (
        j + 0.5 * (p.mu + p.nu + 2.0)
    )


def norm_sq(p: ParamSet, j: int) -> float:
    """Squared weighted L2-norm of the j-th basis eigenfunction.

    2^(mu+nu-1) Gamma(j+(mu+nu+2)/2) Gamma(j+(mu-nu+2)/2)
    / (j! (2j+mu+1) Gamma(j+mu+1)); proved under the ic1 condition only.
    """
    if not p.ic1:
        raise ValueError("norm formula requires the ic1 integrality condition")
    if j < 0:
        raise ValueError("norm_sq needs j >= 0")
    mu, nu = p.mu, p.nu
    lg = (
        (mu + nu - 1.0) * math.log(2.0)
        + math.lgamma(j + 0.5 * (mu + nu + 2.0))
        + math.lgamma(j + 0.5 * (mu - nu + 2.0))
        - math.lgamma(j + 1.0)
        - math.log(2.0 * j + mu + 1.0)
        - math.lgamma(j + mu + 1.0)
    )
    return math.exp(lg)


@dataclass(frozen=True)
class FiveTermConstants:
    """Coefficients of the quartic-in-j factor in the five-term recurrence."""

    a: float
    b: float
    c: float
    d: float
    e: float

    def quartic(self, j: float) -> float:
        return (((self.a * j + self.b) * j + self.c) * j + self.d) * j + self.e


def five_term_constants(mu: float, nu: float) -> FiveTermConstants:
    return FiveTermConstants(
        a=6.0,
        b=12.0 * (mu + 1.0),
        c=0.5 * (17.0 * mu * mu - nu * nu + 36.0 * mu + 8.0),
        d=0.5 * (mu + 1.0) * (5.0 * mu * mu - nu * nu + 12.0 * mu - 4.0),
        e=0.25 * (mu - 1.0) * (mu + 2.0) * (mu + nu + 2.0) * (mu - nu + 2.0),
    )


def parity_coefficients(alpha: float) -> tuple[complex, complex]:
    """Rotation coefficients (a, b) with a = e^{-i pi alpha} and
    b = Gamma(1-alpha/2) Gamma(alpha/2)/2 (e^{-i pi alpha} - 1).

    For an odd integer alpha = 2n+1 these are exactly (-1, (-1)^(n+1) pi).
    """
    if is_integer(alpha):
        n2 = round(alpha)
        if n2 % 2 == 0:
            raise ValueError("parity coefficients undefined at even integers (Gamma poles)")
        n = (n2 - 1) // 2
        return (-1.0 + 0.0j, (-1.0) ** (n + 1) * math.pi + 0.0j)
    a = complex(math.cos(math.pi * alpha), -math.sin(math.pi * alpha))
    b = 0.5 * gamma(1.0 - 0.5 * alpha) * gamma(0.5 * alpha) * (a - 1.0)
    return a, b


def parity_matrix(p: ParamSet) -> np.ndarray:
    """Lower-triangular 4x4 matrix mapping the solution vector at x to its
    value at e^{i pi} x; requires mu, nu away from the even integers."""
    for v in (p.mu, p.nu):
        if is_integer(v) and round(v) % 2 == 0:
            raise ValueError("parity matrix undefined for even-integer parameters")
    a_mu, b_mu = parity_coefficients(p.mu)
    a_nu, b_nu = parity_coefficients(p.nu)
    return np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [b_nu, a_nu, 0.0, 0.0],
            [b_mu, 0.0, a_mu, 0.0],
            [b_mu * b_nu, a_nu * b_mu, a_mu * b_nu, a_mu * a_nu],
        ],
        dtype=complex,
    )


def leading_asymptotic(kind: SolutionKind | int, p: ParamSet, j: int):
    """Leading behavior of solution i at x -> 0.

    Returns ``(exponent, constant, log_flag)`` such that the function
    behaves like ``constant * x**exponent`` (or
    ``constant * (-log(x/2)) * x**exponent`` when ``log_flag``).
    """
    i = kind.i if isinstance(kind, SolutionKind) else SolutionKind(kind).i
    mu, nu = p.mu, p.nu
    if is_integer(mu) and round(mu) <= -1:
        raise ValueError("asymptotic data undefined for mu in {-1, -2, ...}")
    if i in (1, 2):
        if j < 0:
            raise ValueError("need j >= 0 for i = 1, 2")
    else:
        if not is_integer(mu):
            raise ValueError("i = 3, 4 needs integer mu")
        if j < -round(mu):
            raise ValueError("need j >= -mu for i = 3, 4")
    if i == 1:
        c = pochhammer(0.5 * (mu + nu + 2.0), j) / math.factorial(j) * rgamma(
            0.5 * (mu + 2.0)
        ) * rgamma(0.5 * (nu + 2.0))
        return 0.0, c, False
    if i == 2:
        f = pochhammer(0.5 * (mu - abs(nu) + 2.0), j) / math.factorial(j) * rgamma(0.5 * (mu + 2.0))
        if nu > 0:
            return -nu, f * 2.0 ** (nu - 1.0) * gamma(0.5 * nu), False
        if nu == 0:
            return 0.0, f, True
        return 0.0, f * 0.5 * gamma(-0.5 * nu), False
    m = round(mu)
    if i == 3:
        c = (
            2.0 ** (mu - 1.0)
            * gamma(0.5 * mu)
            * pochhammer(0.5 * (-mu + nu + 2.0), j + m)
            / math.factorial(j + m)
            * rgamma(0.5 * (nu + 2.0))
        )
        return -mu, c, False
    h = gamma(0.5 * mu) * pochhammer(0.5 * (-mu - abs(nu) + 2.0), j + m) / math.factorial(j + m)
    if nu > 0:
        return -mu - nu, h * 2.0 ** (mu + nu - 2.0) * gamma(0.5 * nu), False
    if nu == 0:
        return -mu, h * 2.0 ** (mu - 1.0), True
    return -mu, h * 2.0 ** (mu - 2.0) * gamma(-0.5 * nu), False
