"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and
per-criterion runtimes.  Tolerances are pinned here, not configurable.
"""

import math
import time

import numpy as np
import pytest

from quarteig.params import ParamSet, eigenvalue, eigenvalue_casimir
from quarteig.verify import run_suite


def _report(number, name, residual, tolerance, runtime, budget, detail=""):
    ok = residual <= tolerance and runtime < budget
    status = "PASS" if ok else "FAIL"
    print(
        f"[acceptance] criterion {number} ({name}): {status} "
        f"worst={residual:.3e} tol={tolerance:g} runtime={runtime:.1f}s/<{budget:g}s {detail}"
    )
    assert residual <= tolerance, f"criterion {number}: {residual:.3e} > {tolerance}"
    assert runtime < budget, f"criterion {number}: runtime {runtime:.1f}s over budget {budget}s"


def _suite_worst(report, prefix=None):
    worst = 0.0
    for c in report.cases:
        if c.skipped_reason is not None:
            continue
        if prefix and not c.id.startswith(prefix):
            continue
        ref = c.residual / c.tolerance if c.tolerance > 0 else (1.0 if not c.passed else 0.0)
        worst = max(worst, ref)
    return worst


def test_criterion_01_closed_form_oracle():
    t0 = time.time()
    rep = run_suite("oracle_match")
    worst = 0.0
    for c in rep.cases:
        if c.id.startswith("closed_form."):
            worst = max(worst, c.residual)
            assert c.passed, c.id
    _report(1, "closed-form oracle", worst, 1e-10, time.time() - t0, 5.0,
            "mu in {1,3,5,2.5}, j<=10, 20 x-points")


def test_criterion_02_eigen_equation():
    t0 = time.time()
    rep = run_suite("eigen")
    assert rep.all_passed, [c.id for c in rep.cases if not c.passed]
    worst = max(c.residual for c in rep.cases if c.skipped_reason is None)
    _report(2, "eigen-equation", worst, 1e-9, time.time() - t0, 20.0,
            "i=1,2 at (3,1),(5,3),(1.5,0.5); i=3,4 at (3,1.4); j<=8")


def test_criterion_03_orthogonality_norms():
    t0 = time.time()
    rep = run_suite("orthogonality")
    gram = [c for c in rep.cases if c.id.startswith("gram.")]
    assert all(c.passed for c in gram), [c.id for c in gram if not c.passed]
    worst = max(c.residual for c in gram)
    assert rep.all_passed
    _report(3, "orthogonality and norms", worst, 1e-7, time.time() - t0, 60.0,
            "(3,1),(4,2),(1,-1), j,k<=6")


def test_criterion_04_recurrences():
    t0 = time.time()
    rep = run_suite("recurrence")
    assert rep.all_passed, [c.id for c in rep.cases if not c.passed]
    worst = _suite_worst(rep)
    _report(4, "recurrences", worst, 1.0, time.time() - t0, 20.0,
            "three-term 1e-10, five-term 1e-9, parameter shifts 1e-9 (worst shown /tol)")


def test_criterion_05_integral_representations():
    t0 = time.time()
    rep = run_suite("integral_rep")
    assert rep.all_passed, [c.id for c in rep.cases if not c.passed]
    worst = max(c.residual for c in rep.cases)
    _report(5, "integral representations", worst, 1e-6, time.time() - t0, 60.0,
            "(1,1.5,0.5) and (2,3,1), j<=3, x in {0.5,2}")


def test_criterion_06_asymptotics():
    t0 = time.time()
    rep = run_suite("asymptotics")
    small = [c for c in rep.cases if c.id.startswith("small_x.")]
    large = [c for c in rep.cases if c.id.startswith("large_x.")]
    assert all(c.passed for c in small + large)
    assert rep.all_passed
    worst_small = max(c.residual for c in small)
    worst_large = max(c.residual for c in large)
    _report(6, "asymptotics", max(worst_small, worst_large), 1e-2, time.time() - t0, 5.0,
            f"small-x worst {worst_small:.2e}, large-x ratio drift {worst_large:.2e}")


def test_criterion_07_meijer_transform():
    t0 = time.time()
    rep = run_suite("transform")
    assert rep.all_passed, [c.id for c in rep.cases if not c.passed]
    worst = _suite_worst(rep)
    _report(7, "transform", worst, 1.0, time.time() - t0, 90.0,
            "kernel 1e-10/ODE 1e-7/eigen 1e-4/identity 1e-4 (worst shown /tol)")


def test_criterion_08_fft_oracle():
    t0 = time.time()
    rep = run_suite("oracle_match")
    fft = [c for c in rep.cases if c.id.startswith("fft.")]
    assert all(c.passed for c in fft), [c.id for c in fft if not c.passed]
    worst = max(c.residual for c in fft)
    _report(8, "independent FFT oracle", worst, 1e-9, time.time() - t0, 10.0,
            "(3,1),(5,1),(5,3),(3,-1), j<=10, x in [0.25,8]")


def test_criterion_09_parity():
    t0 = time.time()
    rep = run_suite("parity")
    assert rep.all_passed
    worst = max(c.residual for c in rep.cases if c.id.startswith("parity.j"))
    _report(9, "parity", worst, 1e-9, time.time() - t0, 2.0, "(3,1), j<=4, elementary path")


def test_criterion_10_eigenvalue_identity():
    t0 = time.time()
    worst_ulps = 0.0
    for mu in range(-9, 10):
        for nu in range(-9, 10):
            p = ParamSet.classify(float(mu), float(nu))
            for j in range(0, 51):
                a = eigenvalue(p, j)
                b = eigenvalue_casimir(p, j)
                ulps = abs(a - b) / np.spacing(max(abs(a), 1.0))
                worst_ulps = max(worst_ulps, ulps)
    _report(10, "eigenvalue identity", worst_ulps, 4.0, time.time() - t0, 1.0,
            "|mu|,|nu|<=9, j<=50, units of ulps")
