"""Truncated Laurent series in the expansion variable t.

Coefficients live in any ring with + and * (floats, Laurent polynomials,
Bessel-ladder sums).  A series records its lowest exponent ``offset`` and
the highest exponent ``order`` through which its coefficients are exact;
everything below ``offset`` is exactly zero, everything above ``order`` is
unknown.  Multiplication tracks how far the product stays exact:

    order(a*b) = min(order(a) + offset(b), order(b) + offset(a)).

Coefficient accumulation always runs in a fixed index order so that the
coefficients of a series are bit-identical no matter how far beyond them
the truncation reaches.
"""

from __future__ import annotations

__all__ = ["TruncatedSeries", "binomial_series", "series_add", "series_mul"]


class TruncatedSeries:
    __slots__ = ("offset", "coeffs", "order")

    def __init__(self, offset: int, coeffs: list, order: int):
        if len(coeffs) != order - offset + 1:
            raise ValueError("coefficient count does not match offset/order")
        self.offset = int(offset)
        self.coeffs = list(coeffs)
        self.order = int(order)

    @classmethod
    def zeros(cls, offset: int, order: int) -> "TruncatedSeries":
        return cls(offset, [0.0] * (order - offset + 1), order)

    @classmethod
    def from_terms(cls, terms: dict, order: int) -> "TruncatedSeries":
        """Series with the given exponent -> coefficient map, exact through order."""
        offset = min(terms) if terms else 0
        if terms and max(terms) > order:
            raise ValueError("term beyond requested order")
        coeffs = [terms.get(j, 0.0) for j in range(offset, order + 1)]
        return cls(offset, coeffs, order)

    def __getitem__(self, j: int):
        """Coefficient of t^j; exact zero below the offset."""
        if j > self.order:
            raise IndexError(f"coefficient t^{j} beyond truncation order {self.order}")
        if j < self.offset:
            return 0.0
        return self.coeffs[j - self.offset]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries(offset={self.offset}, order={self.order})"

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by a scalar (or ring element) c."""
        return TruncatedSeries(
            self.offset, [c * v if _nonzero(v) else 0.0 for v in self.coeffs], self.order
        )

    def shift_t(self, r: int) -> "TruncatedSeries":
        """Multiply by t^r."""
        return TruncatedSeries(self.offset + r, self.coeffs, self.order + r)

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        offset = min(self.offset, other.offset)
        out = []
        for j in range(offset, order + 1):
            a = self[j] if j <= self.order else 0.0
            b = other[j] if j <= other.order else 0.0
            if _nonzero(a) and _nonzero(b):
                out.append(a + b)
            elif _nonzero(a):
                out.append(a)
            elif _nonzero(b):
                out.append(b)
            else:
                out.append(0.0)
        return TruncatedSeries(offset, out, order)

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        offset = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        if order < offset:
            raise ValueError("truncation orders leave no exact coefficients")
        out = []
        for n in range(offset, order + 1):
            acc = 0.0
            for k in range(self.offset, n - other.offset + 1):
                if k > self.order:
                    break
                a = self[k]
                if not _nonzero(a):
                    continue
                b = other[n - k]
                if not _nonzero(b):
                    continue
                term = a * b
                acc = term if not _nonzero(acc) else acc + term
            out.append(acc)
        return TruncatedSeries(offset, out, order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.offset, self.coeffs[: order - self.offset + 1], order)


def _nonzero(v) -> bool:
    if isinstance(v, (int, float)):
        return v != 0.0
    if hasattr(v, "dtype"):
        return v != 0
    return bool(v)


def binomial_series(alpha: float, order: int, dtype=float) -> TruncatedSeries:
    """(1-t)^(-alpha) = sum_j (alpha)_j / j! t^j, exact through t^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    one = dtype(1)
    a = dtype(alpha)
    coeffs = [one]
    c = one
    for j in range(1, order + 1):
        c = c * (a + dtype(j - 1)) / dtype(j)
        coeffs.append(c)
    return TruncatedSeries(0, coeffs, order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Sum of two series declared at the same truncation order."""
    if a.order != b.order:
        raise ValueError(f"truncation order mismatch: {a.order} != {b.order}")
    return a.add(b)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two series declared at the same truncation order."""
    if a.order != b.order:
        raise ValueError(f"truncation order mismatch: {a.order} != {b.order}")
    return a.mul(b)
