"""The public evaluation API: dispatch, batching, small-x checks."""

import math

import numpy as np
import pytest

from quarteig.eigenfun import (
    EigenfunctionHandle,
    closed_form_kind,
    closed_form_nu_minus1,
    lambda_batch,
    lambda_eval,
    small_x_check,
)
from quarteig.generating import eigenfunction
from quarteig.params import ParamSet, eigenvalue

P31 = ParamSet.classify(3.0, 1.0)
P3M1 = ParamSet.classify(3.0, -1.0)


class TestDispatch:
    def test_closed_form_selection(self):
        assert closed_form_kind(2, -1.0) == "nu_minus1"
        assert closed_form_kind(2, 1.0) == "nu_plus1"
        assert closed_form_kind(1, -1.0) == "nu_minus1"
        assert closed_form_kind(1, 1.0) is None
        assert closed_form_kind(3, -1.0) is None

    def test_values(self):
        assert lambda_eval(2, 0, P3M1, 1.0) == pytest.approx(
            (2.0 / 3.0) * math.exp(-1.0), rel=1e-14
        )
        ref = 2 / (3 * math.pi) * (math.e + 1 / math.e)
        assert lambda_eval(1, 0, P3M1, 1.0) == pytest.approx(ref, rel=1e-14)

    def test_negative_j_is_exact_zero(self):
        assert lambda_eval(2, -1, P3M1, 1.0) == 0.0
        assert lambda_eval(3, -4, P31, 1.0) == 0.0

    def test_engine_agrees_with_closed_form(self):
        for j in (0, 2, 5):
            eng = eigenfunction(2, j, P3M1).evaluate(1.3)
            assert lambda_eval(2, j, P3M1, 1.3) == pytest.approx(eng, rel=1e-11)

    def test_nu_plus1_factor(self):
        for x in (0.5, 2.0):
            a = lambda_eval(2, 3, P31, x)
            b = closed_form_nu_minus1(2, 3, 3.0, x) * 2.0 / x
            assert a == pytest.approx(b, rel=1e-14)

    def test_ic2_guard(self):
        with pytest.raises(ValueError):
            lambda_eval(3, 0, ParamSet.classify(2.0, 1.0), 1.0)


class TestHandle:
    def test_lazy_rep_built_once(self):
        h = EigenfunctionHandle(2, 3, ParamSet.classify(3.0, 1.4))
        r1 = h.rep
        assert h.rep is r1

    def test_engine_and_closed_form_agree_on_window(self):
        h = EigenfunctionHandle(2, 2, P3M1)
        for x in np.geomspace(0.1, 20.0, 8):
            assert h.rep.evaluate(float(x)) == pytest.approx(
                h.evaluate(float(x)), rel=1e-10, abs=1e-13
            )


class TestBatch:
    def test_bitwise_against_single_eval(self):
        p = ParamSet.classify(3.0, 1.4)
        xs = [0.5, 1.0, 2.0]
        js, mat = lambda_batch(3, p, 5, xs)
        assert js[0] == -3
        for rj, j in enumerate(js):
            for cx, x in enumerate(xs):
                assert mat[rj, cx] == lambda_eval(3, j, p, x)

    def test_closed_form_batch(self):
        js, mat = lambda_batch(2, P3M1, 3, [1.0])
        assert js == [0, 1, 2, 3]
        assert mat[0, 0] == lambda_eval(2, 0, P3M1, 1.0)

    def test_small_x_column_tracks_asymptotics(self):
        js, mat = lambda_batch(2, P31, 2, [1e-4])
        from quarteig.params import leading_asymptotic

        for rj, j in enumerate(js):
            expo, c, _ = leading_asymptotic(2, P31, j)
            assert mat[rj, 0] == pytest.approx(c * (1e-4) ** expo, rel=1e-3)


class TestSmallX:
    def test_l2_constant(self):
        m, e = small_x_check(2, P31, 0, 1e-3)
        assert e == pytest.approx(4.0 / 3.0, rel=1e-14)
        assert m == pytest.approx(e, rel=1e-2)

    def test_all_families_at_ic2_point(self):
        p = ParamSet.classify(3.0, 1.4)
        for i in (1, 2, 3, 4):
            m, e = small_x_check(i, p, 0, 1e-3)
            assert m == pytest.approx(e, rel=1e-2)

    def test_log_row(self):
        # the log rows converge only logarithmically (the Euler-gamma
        # subleading term), so the probe point sits very deep
        p = ParamSet.classify(3.0, 0.0)
        m, e = small_x_check(2, p, 0, 1e-8)
        assert m == pytest.approx(e, rel=5e-2)


class TestEigenvalueShiftSymmetry:
    def test_lambda_grid_identity(self):
        # lambda_j at (mu, nu) equals lambda_{j+(mu-nu)/2} at (nu, mu)
        for mu, nu in [(3.0, 1.0), (5.0, 1.0), (4.0, 2.0)]:
            shift = round((mu - nu) / 2)
            for j in range(8):
                a = eigenvalue(ParamSet.classify(mu, nu), j)
                b = eigenvalue(ParamSet.classify(nu, mu), j + shift)
                assert a == b
