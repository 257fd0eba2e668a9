"""Oracles, suite reports, determinism, and the report schema."""

import json

import numpy as np
import pytest

from quarteig.generating import eigenfunction
from quarteig.params import ParamSet
from quarteig.verify import (
    SUITE_NAMES,
    oracle_coefficient_fft,
    oracle_derivative_fd,
    run_suite,
)

P31 = ParamSet.classify(3.0, 1.0)


class TestFFTOracle:
    def test_known_first_coefficient(self):
        import math

        vals = oracle_coefficient_fft(2, P31, 1.0, 4)
        ref = 4.0 * math.exp(-1.0) / 3.0  # ktilde_{1/2}(1)/Gamma(5/2)
        assert vals[0] == pytest.approx(ref, rel=1e-12)

    def test_matches_engine_far_into_the_tail(self):
        vals = oracle_coefficient_fft(2, P31, 2.0, 10)
        for j in range(11):
            eng = eigenfunction(2, j, P31).evaluate(2.0)
            assert vals[j] == pytest.approx(eng, rel=1e-9, abs=1e-12)

    def test_laurent_families_are_shifted(self):
        p = ParamSet.classify(3.0, 1.0)
        vals = oracle_coefficient_fft(3, p, 1.0, 4, radius=0.4)
        for j in range(-3, 5):
            eng = eigenfunction(3, j, p).evaluate(1.0)
            assert vals[j + 3] == pytest.approx(eng, rel=1e-6, abs=1e-8)

    def test_radius_independence(self):
        a = oracle_coefficient_fft(2, P31, 1.0, 8, radius=0.2)
        b = oracle_coefficient_fft(2, P31, 1.0, 8, radius=0.3)
        scale = np.max(np.abs(a))
        assert np.max(np.abs(a - b) / np.maximum(np.abs(a), 1e-9 * scale)) < 1e-10

    def test_radius_domain_guard(self):
        with pytest.raises(ValueError):
            oracle_coefficient_fft(2, P31, 1.0, 4, radius=1.1)

    def test_even_parameters_rejected(self):
        with pytest.raises(ValueError):
            oracle_coefficient_fft(2, ParamSet.classify(4.0, 2.0), 1.0, 4)


class TestFDOracle:
    @pytest.mark.parametrize("i", [1, 2])
    @pytest.mark.parametrize("j", [0, 1, 2, 3])
    def test_matches_engine(self, i, j):
        eng = eigenfunction(i, j, P31).evaluate(1.5)
        fd = oracle_derivative_fd(i, P31, 1.5, j)
        assert fd == pytest.approx(eng, rel=1e-6)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            oracle_derivative_fd(1, P31, 1.0, 4)
        with pytest.raises(ValueError):
            oracle_derivative_fd(3, P31, 1.0, 1)


class TestReports:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nope")

    def test_schema(self):
        rep = run_suite("parity")
        d = rep.to_dict()
        assert set(d) >= {"suite", "build_info", "config", "cases", "summary", "timestamp"}
        case = d["cases"][0]
        assert set(case) >= {"id", "params", "residual", "tolerance", "passed"}
        assert d["summary"]["failed"] == 0

    def test_determinism_modulo_timestamp(self):
        a = run_suite("asymptotics").to_json(timestamp=False)
        b = run_suite("asymptotics").to_json(timestamp=False)
        assert a == b

    def test_skips_recorded_with_reason(self):
        rep = run_suite("transform", {"mu": 4.0, "nu": 2.0})
        assert rep.summary["skipped"] == len(rep.cases) > 0
        assert all(c.skipped_reason for c in rep.cases)
        assert rep.all_passed

    def test_forced_failure_selftest(self):
        rep = run_suite("eigen", {"perturb": 1e-6, "mu": 3.0, "nu": 1.0, "j_max": 0})
        assert not rep.all_passed

    def test_suite_names_frozen(self):
        assert SUITE_NAMES == (
            "eigen",
            "recurrence",
            "orthogonality",
            "asymptotics",
            "integral_rep",
            "parity",
            "transform",
            "oracle_match",
        )

    def test_json_round_trips(self):
        rep = run_suite("parity")
        d = json.loads(rep.to_json())
        assert d["summary"] == rep.summary
