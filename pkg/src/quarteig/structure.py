"""Structured functions: finite sums  sum_l P_l(x) * B_{beta+l}(x).

``P_l`` are Laurent polynomials and ``B`` is one of the normalized Bessel
kinds at ladder orders ``beta + l``, ``l`` a non-negative integer.  The
algebra is closed under addition, multiplication by Laurent polynomials
(hence by x^k for any integer k), d/dx and the Euler operator theta,
because

    d/dx B_a = sign * (x/2) B_{a+1}      (sign +1 for I, -1 for K),

so every differential operator built from theta and x acts exactly on the
coefficients.  Evaluation reuses a single Bessel ladder across all terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import dd
from .laurent import LaurentPoly
from .params import ParamSet, SolutionKind
from .specfun import BesselKind, bessel_ladder

__all__ = ["BesselSum", "Eigenfunction"]


class BesselSum:
    """Finite combination  sum_l P_l(x) B_{beta+l}(x)  for one Bessel kind."""

    __slots__ = ("kind", "beta", "_terms")

    def __init__(self, kind: BesselKind, beta: float, terms=None):
        self.kind = kind
        self.beta = float(beta)
        t = {}
        if terms:
            for l, poly in terms.items():
                if not isinstance(poly, LaurentPoly):
                    poly = LaurentPoly(poly)
                if poly:
                    t[int(l)] = poly
        self._terms = t

    @classmethod
    def unit(cls, kind: BesselKind, beta: float) -> "BesselSum":
        """The bare ladder base B_beta (polynomial part 1)."""
        return cls(kind, beta, {0: LaurentPoly.constant(1.0)})

    @classmethod
    def zero(cls, kind: BesselKind, beta: float) -> "BesselSum":
        return cls(kind, beta)

    # -- inspection ---------------------------------------------------------

    def items(self):
        return sorted(self._terms.items())

    def term(self, l: int) -> LaurentPoly:
        return self._terms.get(l, LaurentPoly.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def max_ladder(self) -> int:
        return max(self._terms) if self._terms else 0

    @property
    def min_exponent(self):
        exps = [p.min_exp for _, p in self._terms.items() if p]
        return min(exps) if exps else None

    def max_abs_coeff(self) -> float:
        return max((p.max_abs() for p in self._terms.values()), default=0.0)

    def _compatible(self, other: "BesselSum"):
        if self.kind is not other.kind or self.beta != other.beta:
            raise ValueError("cannot combine sums over different ladders")

    def __repr__(self) -> str:
        rows = ", ".join(f"l={l}: {p!r}" for l, p in self.items())
        return f"BesselSum({self.kind.value}, beta={self.beta:g}, {{{rows}}})"

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BesselSum):
            if hasattr(other, "__float__") and other == 0:
                return self
            return NotImplemented
        self._compatible(other)
        t = dict(self._terms)
        for l, poly in other._terms.items():
            t[l] = t[l] + poly if l in t else poly
        return BesselSum(self.kind, self.beta, t)

    __radd__ = __add__

    def __neg__(self):
        return BesselSum(self.kind, self.beta, {l: -p for l, p in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Scale by a scalar or multiply through by a Laurent polynomial."""
        if isinstance(other, LaurentPoly):
            return BesselSum(self.kind, self.beta, {l: p * other for l, p in self._terms.items()})
        if hasattr(other, "__float__"):
            if other == 0:
                return BesselSum.zero(self.kind, self.beta)
            return BesselSum(self.kind, self.beta, {l: p * other for l, p in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def mul_xpow(self, k: int) -> "BesselSum":
        return BesselSum(self.kind, self.beta, {l: p.shift(k) for l, p in self._terms.items()})

    @property
    def _sign(self) -> float:
        return 1.0 if self.kind is BesselKind.I else -1.0

    def ddx(self) -> "BesselSum":
        """Exact derivative via the Bessel ladder."""
        t: dict[int, LaurentPoly] = {}

        def acc(l, poly):
            if poly:
                t[l] = t[l] + poly if l in t else poly

        for l, p in self.items():
            acc(l, p.derivative())
            acc(l + 1, p.shift(1) * (0.5 * self._sign))
        return BesselSum(self.kind, self.beta, t)

    def theta(self) -> "BesselSum":
        """Euler operator x d/dx: theta(x^p B_a) = p x^p B_a +/- (x^{p+2}/2) B_{a+1}."""
        t: dict[int, LaurentPoly] = {}

        def acc(l, poly):
            if poly:
                t[l] = t[l] + poly if l in t else poly

        for l, p in self.items():
            acc(l, p.theta())
            acc(l + 1, p.shift(2) * (0.5 * self._sign))
        return BesselSum(self.kind, self.beta, t)

    # -- evaluation ---------------------------------------------------------

    def ladder(self, x):
        return bessel_ladder(self.kind, self.beta, x, self.max_ladder)

    def evaluate(self, x, ladder=None, compensated: bool = False):
        """Value at x (scalar or array); one ladder evaluation reused.

        ``ladder`` may be supplied (must cover ``max_ladder`` at the same
        base order and argument).  ``compensated`` performs the final
        coefficient sum with error-free transformations (scalar x only).
        """
        if not self._terms:
            z = np.asarray(x) * 0.0
            return z.item() if z.ndim == 0 else z
        if ladder is None:
            ladder = self.ladder(x)
        elif len(ladder) <= self.max_ladder:
            raise ValueError("supplied ladder too short")
        xarr = np.asarray(x)
        scalar = xarr.ndim == 0
        if compensated:
            if not scalar:
                return np.array([self.evaluate(float(v), compensated=True) for v in xarr])
            xv = float(xarr)
            cs, fs = [], []
            for l, poly in self.items():
                b = float(ladder.values[l][0])
                for p, c in poly.items():
                    cs.append(c)
                    fs.append(xv**p * b)
            return dd.dot2(cs, fs)
        total = None
        for l, poly in self.items():
            term = poly.evaluate(ladder.x) * ladder.values[l]
            total = term if total is None else total + term
        if total.shape == (1,) and scalar:
            return float(total[0]) if not np.iscomplexobj(total) else complex(total[0])
        return total

    def abs_evaluate(self, x, ladder=None):
        """Sum of absolute term magnitudes  sum |c| |x^p| |B_{beta+l}(x)|.

        The conditioning scale of :meth:`evaluate`: the value is only
        determined up to ~eps times this (coefficients are doubles).
        """
        if not self._terms:
            z = np.abs(np.asarray(x)) * 0.0
            return z.item() if z.ndim == 0 else z
        if ladder is None:
            ladder = self.ladder(x)
        xa = np.abs(np.asarray(ladder.x, dtype=float))
        total = None
        for l, poly in self.items():
            mag = sum(abs(c) * xa**p for p, c in poly.items())
            term = mag * np.abs(ladder.values[l])
            total = term if total is None else total + term
        scalar = np.asarray(x).ndim == 0
        if total.shape == (1,) and scalar:
            return float(total[0].real)
        return total

    # -- housekeeping -------------------------------------------------------

    def prune(self, tol_abs: float = 0.0) -> "BesselSum":
        """Drop coefficients with magnitude <= tol_abs (and empty terms)."""
        t = {}
        for l, poly in self._terms.items():
            kept = LaurentPoly({p: c for p, c in poly.items() if abs(c) > tol_abs})
            if kept:
                t[l] = kept
        return BesselSum(self.kind, self.beta, t)

    def allclose(self, other: "BesselSum", rtol: float = 1e-12) -> bool:
        self._compatible(other)
        scale = max(self.max_abs_coeff(), other.max_abs_coeff(), 1e-300)
        ls = set(self._terms) | set(other._terms)
        for l in ls:
            a, b = self.term(l), other.term(l)
            for p in set(dict(a.items())) | set(dict(b.items())):
                if abs(a.coeff(p) - b.coeff(p)) > rtol * scale:
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "beta": self.beta,
            "terms": [
                {"l": l, "poly": [{"p": p, "c": c} for p, c in poly.items()]}
                for l, poly in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BesselSum":
        terms = {
            t["l"]: LaurentPoly({e["p"]: e["c"] for e in t["poly"]}) for t in d["terms"]
        }
        return cls(BesselKind(d["kind"]), d["beta"], terms)


@dataclass(frozen=True)
class Eigenfunction:
    """A structured eigenfunction: solution family i, coefficient index j,
    parameters, and its exact Bessel-ladder representation."""

    i: int
    j: int
    params: ParamSet
    fn: BesselSum = field(repr=False)

    @property
    def kind(self) -> SolutionKind:
        return SolutionKind(self.i)

    def evaluate(self, x, ladder=None, compensated: bool = False):
        return self.fn.evaluate(x, ladder=ladder, compensated=compensated)

    __call__ = evaluate

    def to_dict(self) -> dict:
        d = self.fn.to_dict()
        return {
            "i": self.i,
            "j": self.j,
            "mu": self.params.mu,
            "nu": self.params.nu,
            "beta": d["beta"],
            "kind": d["kind"],
            "terms": d["terms"],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Eigenfunction":
        fn = BesselSum.from_dict({"kind": d["kind"], "beta": d["beta"], "terms": d["terms"]})
        return cls(d["i"], d["j"], ParamSet.classify(d["mu"], d["nu"]), fn)
