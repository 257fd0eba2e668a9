"""Exact operator application on the structured representation."""

import math

import numpy as np
import pytest

from quarteig.generating import eigenfunction
from quarteig.laurent import LaurentPoly
from quarteig.operators import (
    CancellationError,
    apply_D,
    apply_H,
    apply_S,
    apply_theta,
    eigen_residual,
)
from quarteig.params import ParamSet, eigenvalue
from quarteig.specfun import BesselKind
from quarteig.structure import BesselSum

P31 = ParamSet.classify(3.0, 1.0)
P3M1 = ParamSet.classify(3.0, -1.0)


class TestTheta:
    def test_single_term_action(self):
        # theta(x^p K_b) = p x^p K_b - (x^{p+2}/2) K_{b+1}
        f = BesselSum(BesselKind.K, 0.5, {0: LaurentPoly.monomial(3, 2.0)})
        t = apply_theta(f)
        assert t.term(0).coeff(3) == 6.0
        assert t.term(1).coeff(5) == -1.0

    def test_i_kind_sign(self):
        f = BesselSum(BesselKind.I, 0.5, {0: LaurentPoly.constant(1.0)})
        t = apply_theta(f)
        assert t.term(1).coeff(2) == 0.5
        assert not t.term(0)

    def test_kills_constants_at_origin(self):
        f = BesselSum(BesselKind.I, 0.7, {0: LaurentPoly.constant(1.0)})
        assert apply_theta(f).evaluate(1e-12) == pytest.approx(0.0, abs=1e-20)


class TestD:
    def test_symmetric_in_parameters(self):
        f = eigenfunction(2, 3, P31).fn
        a = apply_D(3.0, 1.0, f)
        b = apply_D(1.0, 3.0, f)
        assert a.allclose(b, rtol=1e-14)

    def test_eigen_relation_pointwise(self):
        f = eigenfunction(2, 0, P31)
        df = apply_D(3.0, 1.0, f.fn, floor_exponent=0)
        lam = eigenvalue(P31, 0)
        for x in (0.5, 1.0, 2.0, 10.0):
            assert df.evaluate(x) == pytest.approx(lam * f.evaluate(x), rel=1e-11)

    def test_floor_check_passes_for_entire_family(self):
        f = eigenfunction(1, 4, P31).fn
        out = apply_D(3.0, 1.0, f, floor_exponent=0)
        assert out.min_exponent >= 0

    def test_floor_violation_reported(self):
        # a function that is genuinely singular: x^{-1} K-ladder term
        f = BesselSum(BesselKind.K, 0.5, {0: LaurentPoly.monomial(-1, 1.0)})
        with pytest.raises(CancellationError):
            apply_D(3.0, 1.0, f, floor_exponent=0)


class TestHS:
    def test_h_minus2_is_theta(self):
        f = eigenfunction(2, 2, P31).fn
        assert apply_H(-2.0, f).allclose(apply_theta(f), rtol=0.0)

    def test_h_steps_j_up_at_bottom(self):
        # (2j+mu+1) H L_j = (j+1)(j+mu+1) L_{j+1} - ... with the j = -1 term absent
        mu, nu = 3.0, 1.0
        f0 = eigenfunction(2, 0, P31).fn
        f1 = eigenfunction(2, 1, P31).fn
        lhs = apply_H(mu + nu, f0) * (mu + 1.0)
        rhs = f1 * (mu + 1.0)
        for x in (0.5, 1.0, 3.0):
            assert lhs.evaluate(x) == pytest.approx(rhs.evaluate(x), rel=1e-12)

    def test_s_eigen_relation_at_nu_minus1(self):
        f = eigenfunction(2, 0, P3M1).fn
        sv = apply_S(3.0, -1, f)
        for x in (0.5, 1.0, 2.0):
            assert sv.evaluate(x) == pytest.approx(-4.0 * f.evaluate(x), rel=1e-11)

    def test_s_squared_collapses_to_d(self):
        for sign, c in ((-1, 8.0), (1, 10.0)):
            nu = float(sign)
            p = ParamSet.classify(3.0, nu)
            f = eigenfunction(2, 1, p).fn
            d = apply_D(3.0, nu, f)
            ss = apply_S(3.0, sign, apply_S(3.0, sign, f)) - f * c
            for x in (0.5, 1.0, 2.0, 5.0):
                assert ss.evaluate(x) == pytest.approx(d.evaluate(x), rel=1e-11)

    def test_s_intertwining(self):
        # S_{mu,+1} (1/x) f = (1/x) S_{mu,-1} f on structured functions
        f = eigenfunction(2, 2, P3M1).fn
        lhs = apply_S(3.0, 1, f.mul_xpow(-1))
        rhs = apply_S(3.0, -1, f).mul_xpow(-1)
        assert lhs.allclose(rhs, rtol=1e-12)


class TestEigenResidual:
    @pytest.mark.parametrize("i,mu,nu", [(1, 3.0, 1.0), (2, 3.0, 1.0), (2, 1.5, 0.5)])
    def test_small_j_tight(self, i, mu, nu):
        p = ParamSet.classify(mu, nu)
        assert eigen_residual(i, p, 2, (0.5, 1.0, 2.0, 5.0)) < 1e-11

    def test_ic2_case_with_noninteger_nu(self):
        p = ParamSet.classify(3.0, 1.4)
        assert eigen_residual(3, p, 0, (0.5, 1.0, 2.0, 5.0)) < 1e-9

    def test_extended_tier_tightens(self):
        p = ParamSet.classify(3.0, 1.0)
        rd = eigen_residual(2, p, 8, (0.5, 1.0, 2.0, 5.0))
        rx = eigen_residual(2, p, 8, (0.5, 1.0, 2.0, 5.0), dtype=np.longdouble)
        assert rx < rd
        assert rx < 1e-9

    def test_zero_crossing_guarded(self):
        # L_{2,1} vanishes exactly at x = 2; the residual there is measured
        # against the grid scale rather than the vanishing value
        p = ParamSet.classify(3.0, 1.0)
        assert eigen_residual(2, p, 1, (0.5, 1.0, 2.0, 5.0)) < 1e-11


class TestFundamentalSystem:
    def test_four_families_solve_same_equation(self):
        p = ParamSet.classify(3.0, 1.4)
        lam = eigenvalue(p, 1)
        for i in (1, 2, 3, 4):
            f = eigenfunction(i, 1, p)
            df = apply_D(p.mu, p.nu, f.fn)
            x = 1.0
            assert df.evaluate(x) == pytest.approx(lam * f.evaluate(x), rel=1e-9)
