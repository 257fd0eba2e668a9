"""Public evaluation API for the eigenfunction families.

Dispatches between the structured series engine and the Laguerre closed
forms available at nu = -/+1:

    family 2, nu = -1:  2^(mu-1) G(j+(mu+1)/2)/G(j+mu+1) e^{-x} L_j^mu(2x)
    family 2, nu = +1:  (2/x) times the nu = -1 value
    family 1, nu = -1:  2^(mu-1) G(j+(mu+1)/2)/(pi G(j+mu+1))
                        (e^{-x} L_j^mu(2x) + e^{x} L_j^mu(-2x))

The closed forms double as permanent regression oracles for the engine.
Indices below the vanishing bound return exactly 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from threading import Lock

import numpy as np

from .generating import eigenfunction
from .params import ParamSet, SolutionKind, leading_asymptotic
from .specfun import bessel_ladder, laguerre
from .structure import Eigenfunction

__all__ = [
    "EigenfunctionHandle",
    "closed_form_kind",
    "lambda_batch",
    "lambda_eval",
    "small_x_check",
]


def closed_form_kind(i: int, nu: float) -> str | None:
    """'nu_minus1' / 'nu_plus1' when a Laguerre closed form covers (i, nu)."""
    if i == 2 and nu == -1.0:
        return "nu_minus1"
    if i == 2 and nu == 1.0:
        return "nu_plus1"
    if i == 1 and nu == -1.0:
        return "nu_minus1"
    return None


def _laguerre_prefactor(mu: float, j: int) -> float:
    return 2.0 ** (mu - 1.0) * math.exp(
        math.lgamma(j + 0.5 * (mu + 1.0)) - math.lgamma(j + mu + 1.0)
    )


def closed_form_nu_minus1(i: int, j: int, mu: float, x):
    """Laguerre closed forms of families 1 and 2 at nu = -1."""
    x = np.asarray(x, dtype=np.asarray(x).dtype)
    c = _laguerre_prefactor(mu, j)
    if i == 2:
        return c * np.exp(-x) * laguerre(j, mu, 2.0 * x)
    if i == 1:
        return (
            c
            / math.pi
            * (np.exp(-x) * laguerre(j, mu, 2.0 * x) + np.exp(x) * laguerre(j, mu, -2.0 * x))
        )
    raise ValueError("closed forms cover i = 1, 2 at nu = -1")


def closed_form_nu_plus1(j: int, mu: float, x):
    """Family 2 at nu = +1: (2/x) times the nu = -1 closed form."""
    x = np.asarray(x, dtype=np.asarray(x).dtype)
    return 2.0 / x * closed_form_nu_minus1(2, j, mu, x)


@dataclass
class EigenfunctionHandle:
    """Lazily built evaluator for one (i, j) pair at fixed parameters."""

    i: int
    j: int
    params: ParamSet
    closed_form: str | None = None
    _rep: Eigenfunction | None = field(default=None, repr=False)
    _lock: Lock = field(default_factory=Lock, repr=False)

    def __post_init__(self):
        self.closed_form = closed_form_kind(self.i, self.params.nu)

    @property
    def rep(self) -> Eigenfunction:
        """The structured representation (built once; benign under races)."""
        if self._rep is None:
            with self._lock:
                if self._rep is None:
                    self._rep = eigenfunction(self.i, self.j, self.params)
        return self._rep

    def evaluate(self, x, ladder=None):
        if self.closed_form == "nu_minus1":
            return closed_form_nu_minus1(self.i, self.j, self.params.mu, x)
        if self.closed_form == "nu_plus1":
            return closed_form_nu_plus1(self.j, self.params.mu, x)
        return self.rep.evaluate(x, ladder=ladder)

    __call__ = evaluate


def _lower_bound(i: int, p: ParamSet) -> int:
    return 0 if i in (1, 2) else -round(p.mu)


def lambda_eval(i, j: int, p: ParamSet, x):
    """Value of the (i, j) eigenfunction at x.

    Closed forms are used when available (families 1, 2 at nu = -/+1),
    otherwise the structured engine.  j below the vanishing bound returns
    exactly 0; negative x is only reachable through the elementary
    half-odd Bessel path (odd nu).
    """
    i = i.i if isinstance(i, SolutionKind) else int(i)
    if i not in (1, 2, 3, 4):
        raise ValueError("family index must be 1..4")
    if j < _lower_bound(i, p):
        z = np.asarray(x) * 0.0
        return z.item() if z.ndim == 0 else z
    return EigenfunctionHandle(i, j, p).evaluate(x)


def lambda_batch(i, p: ParamSet, j_max: int, xs):
    """Values for all j up to j_max on the grid xs.

    Returns ``(j_values, matrix)`` with one row per j.  The engine path
    shares one generating-series expansion across j and one Bessel ladder
    per grid point; entries equal ``lambda_eval`` bitwise (same code
    path, same ladder prefix).
    """
    i = i.i if isinstance(i, SolutionKind) else int(i)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    lower = _lower_bound(i, p)
    js = list(range(lower, j_max + 1))
    handles = [EigenfunctionHandle(i, j, p) for j in js]
    rows = []
    if all(h.closed_form for h in handles):
        for h in handles:
            rows.append(np.atleast_1d(h.evaluate(xs)))
        return js, np.array(rows)
    depth = max(h.rep.fn.max_ladder for h in handles)
    kind = handles[-1].rep.fn.kind
    beta = handles[-1].rep.fn.beta
    ladder = bessel_ladder(kind, beta, xs, depth)
    for h in handles:
        if h.closed_form:
            rows.append(np.atleast_1d(h.evaluate(xs)))
        else:
            rows.append(np.atleast_1d(h.evaluate(xs, ladder=ladder)))
    return js, np.array(rows)


def small_x_check(i, p: ParamSet, j: int, x0: float):
    """Measured vs predicted leading constant at small x.

    measured = L(x0) x0^(-exponent) for power rows, or
    L(x0) / (-log(x0/2) x0^exponent) for the log rows.
    """
    exponent, expected, log_flag = leading_asymptotic(i, p, j)
    val = lambda_eval(i, j, p, x0)
    if log_flag:
        measured = val / (-math.log(0.5 * x0) * x0**exponent)
    else:
        measured = val * x0 ** (-exponent)
    return float(measured), float(expected)
