"""Sparse Laurent polynomials in one variable.

The coefficient carrier of the structured representation: finitely many
real coefficients indexed by (possibly negative) integer exponents.
Instances are treated as immutable; every operation returns a new one.
Coefficients below 1e-300 in magnitude are dropped to avoid subnormal drag.
"""

from __future__ import annotations

import numpy as np

from . import dd

_PRUNE = 1e-300

def _is_scalar(v) -> bool:
    return isinstance(v, (int, float, np.floating)) or (
        not isinstance(v, LaurentPoly) and hasattr(v, "__float__")
    )


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for p, v in coeffs.items():
                if isinstance(v, int):
                    v = float(v)
                if abs(v) > _PRUNE:
                    c[int(p)] = v
        self._c = c

    @classmethod
    def monomial(cls, p: int, c: float = 1.0) -> "LaurentPoly":
        return cls({p: c})

    @classmethod
    def constant(cls, c: float) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    # -- inspection ---------------------------------------------------------

    def items(self):
        return sorted(self._c.items())

    def coeff(self, p: int) -> float:
        return self._c.get(p, 0.0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    @property
    def min_exp(self):
        return min(self._c) if self._c else None

    @property
    def max_exp(self):
        return max(self._c) if self._c else None

    def max_abs(self) -> float:
        return max((abs(v) for v in self._c.values()), default=0.0)

    def __repr__(self) -> str:
        if not self._c:
            return "LaurentPoly(0)"
        parts = [f"{v:g}*x^{p}" for p, v in self.items()]
        return "LaurentPoly(" + " + ".join(parts) + ")"

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(tuple(self.items()))

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            if other == 0:
                return self
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for p, v in other._c.items():
            c[p] = c.get(p, 0.0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({p: -v for p, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly({p: v * other for p, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = {}
        for p1, v1 in sorted(self._c.items()):
            for p2, v2 in sorted(other._c.items()):
                p = p1 + p2
                c[p] = c.get(p, 0.0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({p + k: v for p, v in self._c.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({p - 1: p * v for p, v in self._c.items() if p != 0})

    def theta(self) -> "LaurentPoly":
        """Euler operator x d/dx, exact on monomials."""
        return LaurentPoly({p: p * v for p, v in self._c.items() if p != 0})

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x, compensated: bool = False):
        return self.evaluate(x, compensated=compensated)

    def evaluate(self, x, compensated: bool = False):
        """Evaluate at a scalar or ndarray argument.

        ``compensated`` switches the coefficient sum to the error-free dot
        product (scalar arguments only).
        """
        if not self._c:
            return 0.0 * x
        if compensated:
            items = self.items()
            return dd.dot2([v for _, v in items], [float(x) ** p for p, _ in items])
        total = None
        for p, v in self.items():
            term = v * x**p
            total = term if total is None else total + term
        return total
