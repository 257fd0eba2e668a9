"""Scalar parameter-domain formulas: eigenvalues, norms, parity, asymptotics."""

import math

import numpy as np
import pytest

from quarteig.params import (
    ParamSet,
    SolutionKind,
    eigenvalue,
    eigenvalue_casimir,
    five_term_constants,
    leading_asymptotic,
    norm_sq,
    parity_coefficients,
    parity_matrix,
)


class TestParamSet:
    @pytest.mark.parametrize(
        "mu,nu,ic1",
        [
            (3, 1, True),
            (4, 2, True),
            (1, -1, True),
            (-1, -1, False),  # both at the lower edge
            (3, 2, False),    # parity mismatch
            (1, 3, False),    # ordering violated
            (2.5, 0.5, False),
            (3.0 + 1e-15, 1.0, True),  # integrality detection tolerance
        ],
    )
    def test_ic1(self, mu, nu, ic1):
        assert ParamSet.classify(mu, nu).ic1 is ic1

    @pytest.mark.parametrize(
        "mu,ic2", [(1, True), (3, True), (5, True), (2, False), (-1, False), (2.5, False)]
    )
    def test_ic2(self, mu, ic2):
        assert ParamSet.classify(mu, 0.3).ic2 is ic2


class TestSolutionKind:
    def test_signatures(self):
        assert [SolutionKind(i).delta for i in (1, 2, 3, 4)] == [1, 1, -1, -1]
        assert [SolutionKind(i).epsilon for i in (1, 2, 3, 4)] == [1, -1, 1, -1]

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            SolutionKind(5)


class TestEigenvalue:
    def test_hand_values(self):
        p = ParamSet.classify(3, 1)
        assert eigenvalue(p, 0) == 6.0
        assert eigenvalue(p, 1) == 26.0
        assert eigenvalue(ParamSet.classify(-1, -1), 0) == 0.0

    def test_two_closed_forms_agree_to_ulps(self):
        # acceptance: the quadratic form equals the Casimir-style form
        for mu in range(-9, 10):
            for nu in range(-9, 10):
                p = ParamSet.classify(float(mu), float(nu))
                for j in range(0, 51):
                    a = eigenvalue(p, j)
                    b = eigenvalue_casimir(p, j)
                    assert abs(a - b) <= 4 * np.spacing(max(abs(a), 1.0))

    def test_strictly_increasing_for_mu_above_minus1(self):
        for mu in (-0.5, 0.0, 1.0, 3.0, 7.5):
            p = ParamSet.classify(mu, 1.0)
            lams = [eigenvalue(p, j) for j in range(50)]
            assert all(b > a for a, b in zip(lams, lams[1:]))


class TestNorms:
    def test_hand_values(self):
        assert norm_sq(ParamSet.classify(3, 1), 0) == pytest.approx(2.0 / 3.0, rel=1e-14)
        assert norm_sq(ParamSet.classify(3, 1), 1) == pytest.approx(2.0 / 3.0, rel=1e-14)
        assert norm_sq(ParamSet.classify(1, -1), 0) == pytest.approx(0.25, rel=1e-14)

    def test_positive_across_ic1(self):
        for mu, nu in [(1, -1), (3, 1), (4, 2), (9, 5), (2, 0)]:
            p = ParamSet.classify(mu, nu)
            assert all(norm_sq(p, j) > 0 for j in range(51))

    def test_rejected_outside_ic1(self):
        with pytest.raises(ValueError):
            norm_sq(ParamSet.classify(2.5, 0.5), 0)


class TestFiveTermConstants:
    def test_formulas(self):
        c = five_term_constants(3.0, 1.0)
        assert c.a == 6.0
        assert c.b == 48.0
        assert c.c == 0.5 * (17 * 9 - 1 + 108 + 8)
        assert c.d == 0.5 * 4 * (45 - 1 + 36 - 4)
        assert c.e == 0.25 * 2 * 5 * 6 * 4


class TestParity:
    def test_odd_integer_exact_values(self):
        a1, b1 = parity_coefficients(1.0)
        assert a1 == -1.0 and b1 == -math.pi
        a3, b3 = parity_coefficients(3.0)
        assert a3 == -1.0 and b3 == math.pi

    def test_even_integer_rejected(self):
        with pytest.raises(ValueError):
            parity_coefficients(2.0)

    def test_general_value_is_unit_modulus_rotation(self):
        a, b = parity_coefficients(0.7)
        assert abs(abs(a) - 1.0) < 1e-15
        assert b == pytest.approx(
            0.5 * math.gamma(1 - 0.35) * math.gamma(0.35) * (a - 1.0), rel=1e-13
        )

    def test_matrix_structure(self):
        p = ParamSet.classify(3.0, 1.0)
        m = parity_matrix(p)
        assert m[0].tolist() == [1.0, 0.0, 0.0, 0.0]
        a_mu, b_mu = parity_coefficients(3.0)
        a_nu, b_nu = parity_coefficients(1.0)
        assert np.allclose(np.diag(m), [1.0, a_nu, a_mu, a_mu * a_nu])
        assert np.allclose(np.triu(m, 1), 0.0)
        assert m[1, 0] == b_nu and m[2, 0] == b_mu
        assert np.max(np.abs(m.imag)) == 0.0  # real for odd integers

    def test_matrix_rejects_even_parameters(self):
        with pytest.raises(ValueError):
            parity_matrix(ParamSet.classify(4.0, 2.0))


class TestLeadingAsymptotic:
    def test_family1_at_mu_nu_one(self):
        expo, c, logf = leading_asymptotic(1, ParamSet.classify(1.0, 1.0), 0)
        assert (expo, logf) == (0.0, False)
        assert c == pytest.approx(4.0 / math.pi, rel=1e-14)

    def test_family2_positive_nu(self):
        expo, c, logf = leading_asymptotic(2, ParamSet.classify(3.0, 1.0), 0)
        assert (expo, logf) == (-1.0, False)
        assert c == pytest.approx(4.0 / 3.0, rel=1e-14)

    def test_family2_log_row(self):
        expo, c, logf = leading_asymptotic(2, ParamSet.classify(3.0, 0.0), 0)
        assert logf is True
        assert expo == 0.0
        assert c == pytest.approx(1.0 / math.gamma(2.5), rel=1e-14)

    def test_family4_negative_nu_row(self):
        expo, c, logf = leading_asymptotic(4, ParamSet.classify(3.0, -0.5), 0)
        assert expo == -3.0 and logf is False

    def test_rejects_excluded_mu(self):
        with pytest.raises(ValueError):
            leading_asymptotic(1, ParamSet.classify(-2.0, 0.5), 0)
