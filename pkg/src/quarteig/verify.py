"""Independent oracles and the verification suites.

Two oracles recompute eigenfunction values without the structured engine:

* ``oracle_coefficient_fft`` reads the t^j coefficient as a Cauchy integral
  over a circle |t| = radius < 1, discretized by FFT.  It needs the
  generating function at complex t, hence odd integer parameters wherever
  a K-factor appears (elementary Bessel path).
* ``oracle_derivative_fd`` takes the j-th t-derivative at 0 by central
  differences with one Richardson step -- a second, lower-precision check.

``run_suite`` executes the named property suite over its documented
deterministic grid and returns a machine-readable report.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__ as _pkg_version
from .params import ParamSet, SolutionKind
from .generating import g_value

__all__ = [
    "CaseResult",
    "VerificationReport",
    "SUITE_NAMES",
    "oracle_coefficient_fft",
    "oracle_derivative_fd",
    "run_suite",
]


def _next_pow2(n: int) -> int:
    m = 1
    while m < n:
        m *= 2
    return m


def oracle_coefficient_fft(i, p: ParamSet, x: float, j_max: int, radius: float = 0.25):
    """Coefficients of t^j, j = lower..j_max, via FFT on a circle of given radius.

    Returns an array indexed by j - lower where lower = 0 (i = 1, 2) or
    -mu (i = 3, 4).  Requires odd integer parameters at every K-factor
    and 0 < radius < 1; blow-up of the coefficient tail flags a radius too
    close to the t = 1 singularity.
    """
    i = i if isinstance(i, SolutionKind) else SolutionKind(i)
    if not 0.0 < radius < 1.0:
        raise ValueError("radius must sit inside (0, 1)")
    shift = round(p.mu) if i.i in (3, 4) else 0
    n = _next_pow2(4 * (j_max + shift + 4))
    k = np.arange(n)
    t = radius * np.exp(2j * np.pi * k / n)
    samples = g_value(i, p, t, x)
    if shift:
        samples = samples * t ** shift
    coeffs = np.fft.fft(samples) / n
    js = np.arange(0, j_max + shift + 1)
    vals = coeffs[js] / radius ** js
    tail = np.max(np.abs(coeffs[j_max + shift + 1 : j_max + shift + 5])) / radius ** (
        j_max + shift + 1
    )
    scale = np.max(np.abs(vals)) + 1e-300
    if tail > 1e3 * scale:
        raise ArithmeticError("coefficient tail blow-up: radius too close to t = 1")
    if np.max(np.abs(vals.imag)) > 1e-8 * scale:
        raise ArithmeticError("imaginary residue in FFT coefficients")
    return vals.real


def oracle_derivative_fd(i, p: ParamSet, x: float, j: int, h: float = 1e-2) -> float:
    """(1/j!) d^j/dt^j G_i(t, x) at t = 0 by central differences (i = 1, 2; j <= 3).

    One Richardson step on the h^2-accurate stencils; good to ~1e-7
    relative at desk scale.
    """
    i = i if isinstance(i, SolutionKind) else SolutionKind(i)
    if i.i not in (1, 2) or not 0 <= j <= 3:
        raise ValueError("finite-difference oracle covers i = 1, 2 and j <= 3")

    def g(t):
        return float(g_value(i, p, t, x))

    def stencil(hh):
        if j == 0:
            return g(0.0)
        if j == 1:
            return (g(hh) - g(-hh)) / (2.0 * hh)
        if j == 2:
            return (g(hh) - 2.0 * g(0.0) + g(-hh)) / hh**2
        return (g(2 * hh) - 2.0 * g(hh) + 2.0 * g(-hh) - g(-2 * hh)) / (2.0 * hh**3)

    coarse = stencil(h)
    fine = stencil(0.5 * h)
    value = (4.0 * fine - coarse) / 3.0
    fact = 1.0
    for m in range(2, j + 1):
        fact *= m
    return value / fact


# ---------------------------------------------------------------------------
# report plumbing


@dataclass
class CaseResult:
    id: str
    params: dict
    residual: float
    tolerance: float
    passed: bool
    skipped_reason: str | None = None

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "params": self.params,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
        if self.skipped_reason is not None:
            d["skipped_reason"] = self.skipped_reason
        return d


@dataclass
class VerificationReport:
    suite: str
    config: dict
    cases: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        skipped = sum(1 for c in self.cases if c.skipped_reason is not None)
        passed = sum(1 for c in self.cases if c.skipped_reason is None and c.passed)
        failed = sum(1 for c in self.cases if c.skipped_reason is None and not c.passed)
        return {"passed": passed, "failed": failed, "skipped": skipped}

    @property
    def all_passed(self) -> bool:
        return self.summary["failed"] == 0

    def to_dict(self, timestamp: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "build_info": {"package": "quarteig", "version": _pkg_version, "numpy": np.__version__},
            "config": self.config,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary,
        }
        if timestamp:
            d["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime())
        return d

    def to_json(self, timestamp: bool = True) -> str:
        return json.dumps(self.to_dict(timestamp=timestamp), indent=2, sort_keys=True)


def _case(id_, params, residual, tolerance) -> CaseResult:
    residual = float(residual)
    return CaseResult(id_, params, residual, tolerance, residual <= tolerance)


def _skip(id_, params, reason) -> CaseResult:
    return CaseResult(id_, params, 0.0, 0.0, True, skipped_reason=reason)


def _max_workers() -> int:
    try:
        return max(1, int(os.environ.get("QE_THREADS", "1")))
    except ValueError:
        return 1


def _run_cases(makers) -> list:
    """Evaluate a list of zero-argument case builders, honoring QE_THREADS."""
    workers = _max_workers()
    if workers == 1:
        return [m() for m in makers]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda m: m(), makers))


# ---------------------------------------------------------------------------
# suites (implemented in _suites to keep this module readable)

from . import _suites  # noqa: E402

SUITE_NAMES = (
    "eigen",
    "recurrence",
    "orthogonality",
    "asymptotics",
    "integral_rep",
    "parity",
    "transform",
    "oracle_match",
)


def run_suite(name: str, config: dict | None = None) -> VerificationReport:
    """Run one named suite over its deterministic grid.

    ``config`` may override the documented defaults (parameter sets,
    grids, tolerances, ``perturb`` for the forced-failure self-test,
    ``precision_mode``).  Reports are deterministic given the same
    config and build.
    """
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    config = dict(config or {})
    builder = getattr(_suites, f"suite_{name}")
    report = VerificationReport(suite=name, config=config)
    report.cases = builder(config)
    return report
