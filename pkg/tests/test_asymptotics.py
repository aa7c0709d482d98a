from fractions import Fraction

import pytest

from aqbernstein.asymptotics import (
    Q_ABOVE_1,
    Q_BELOW_1,
    RegimeError,
    _limit_coeffs_q_below_1_literal,
    _limit_ratio_q_above_1_literal,
    convergence_table,
    limit_coeffs,
    limit_coeffs_q_above_1,
    limit_coeffs_q_below_1,
    limit_eigenvalue,
    limit_monomial_coeff,
    limit_ratio_q_above_1,
    regime_of,
)
from aqbernstein.bernstein import OperatorParams, monomial_image
from aqbernstein.eigen import eigenvalue_difference, eigenvector
from aqbernstein.qcalc import q_integer, q_stirling2

F = Fraction


def finite_ratio(q, alpha, k, j, i, n):
    """a_n(k-j, k-i) / (lambda_k - lambda_{k-j}) at finite n (float mode)."""
    params = OperatorParams(n, q, alpha)
    num = monomial_image(k - i, params).coeffs[k - j]
    return num / eigenvalue_difference(k, k - j, params)


class TestRegime:
    def test_split(self):
        assert regime_of(F(1, 2)) == Q_BELOW_1
        assert regime_of(F(3, 2)) == Q_ABOVE_1

    def test_q_one_rejected(self):
        with pytest.raises(RegimeError, match="q=1"):
            regime_of(F(1))

    def test_nonpositive_rejected(self):
        with pytest.raises(RegimeError):
            regime_of(F(0))


class TestLimitEigenvalue:
    def test_below_one(self):
        assert limit_eigenvalue(F(1, 2), 2) == F(1, 2)
        assert limit_eigenvalue(F(1, 2), 3) == F(1, 8)

    def test_above_one(self):
        for k in range(6):
            assert limit_eigenvalue(F(2), k) == 1

    def test_regime_mismatch(self):
        with pytest.raises(RegimeError):
            limit_eigenvalue(F(1, 2), 2, regime=Q_ABOVE_1)

    def test_q_one_rejected(self):
        with pytest.raises(RegimeError):
            limit_eigenvalue(F(1), 2)

    def test_finite_values_approach_float(self):
        for q, want in [(0.5, lambda k: 0.5 ** (k * (k - 1) // 2)),
                        (2.0, lambda k: 1.0)]:
            for k in range(6):
                errs = []
                for n in [50, 100, 200]:
                    from aqbernstein.eigen import eigenvalue

                    lam = eigenvalue(k, OperatorParams(n, q, 0.5))
                    errs.append(abs(lam - want(k)))
                assert errs[-1] < 1e-8


class TestLimitMonomialCoeff:
    def test_diagonal(self):
        for k in range(6):
            assert limit_monomial_coeff(F(1, 2), k, k) == F(1, 2) ** (k * (k - 1) // 2)

    def test_k1(self):
        assert limit_monomial_coeff(F(1, 2), 1, 1) == 1

    def test_regime_guard(self):
        with pytest.raises(RegimeError):
            limit_monomial_coeff(F(2), 1, 2)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            limit_monomial_coeff(F(1, 2), 3, 2)

    def test_finite_coefficients_converge(self):
        q = 0.5
        for k in range(1, 6):
            for r in range(k + 1):
                want = limit_monomial_coeff(q, r, k)
                errs = []
                for n in [25, 50, 100]:
                    got = monomial_image(k, OperatorParams(n, q, 0.5)).coeffs[r]
                    errs.append(abs(got - want))
                assert errs[2] <= errs[1] + 1e-9 and errs[1] <= errs[0] + 1e-9
                assert errs[2] < 1e-9


class TestLimitsBelowOne:
    def test_boundary_rows(self):
        assert limit_coeffs_q_below_1(F(1, 2), F(0), 0).coeffs == (1,)
        assert limit_coeffs_q_below_1(F(1, 2), F(1), 1).coeffs == (0, 1)

    def test_degree_two_matches_universal_eigenvector(self):
        for q in [F(1, 4), F(1, 2), F(3, 4)]:
            lc = limit_coeffs_q_below_1(q, F(1, 2), 2)
            assert lc.coeffs == (0, -1, 1)
            assert lc.limit_lambda == q

    def test_alpha_free(self):
        for k in range(5):
            a = limit_coeffs_q_below_1(F(2, 5), F(0), k)
            b = limit_coeffs_q_below_1(F(2, 5), F(1), k)
            assert a.coeffs == b.coeffs

    def test_regime_guard(self):
        with pytest.raises(RegimeError):
            limit_coeffs_q_below_1(F(2), F(0), 2)

    def test_finite_coefficients_converge(self):
        q = 0.5
        for k in range(2, 6):
            b = limit_coeffs_q_below_1(q, 0.5, k).coeffs
            errs = []
            for n in [25, 50, 100]:
                c = eigenvector(k, OperatorParams(n, q, 0.5))
                errs.append(max(abs(c.coeff(j) - b[j]) for j in range(k + 1)))
            assert errs[2] <= errs[1] + 1e-9 and errs[1] <= errs[0] + 1e-9
            assert errs[2] < 1e-10

    def test_literal_index_reading_diverges(self):
        # with S_q(i,k) instead of S_q(i,j) every interior term vanishes and
        # the finite-n coefficients never approach the result
        q = F(1, 2)
        for k in [3, 4]:
            literal = _limit_coeffs_q_below_1_literal(q, k)
            correct = limit_coeffs_q_below_1(q, F(1, 2), k).coeffs
            assert literal != correct
            c = eigenvector(k, OperatorParams(100, 0.5, 0.5))
            err_lit = max(abs(c.coeff(j) - float(literal[j])) for j in range(k + 1))
            err_cor = max(abs(c.coeff(j) - float(correct[j])) for j in range(k + 1))
            assert err_cor < 1e-10
            assert err_lit > 0.1


class TestLimitsAboveOne:
    def test_boundary_rows(self):
        assert limit_coeffs_q_above_1(F(2), F(0), 0).coeffs == (1,)
        assert limit_coeffs_q_above_1(F(2), F(0), 1).coeffs == (0, 1)
        assert limit_coeffs_q_above_1(F(2), F(0), 1).limit_lambda == 1

    def test_degree_two_matches_universal_eigenvector(self):
        # the exact degree-2 eigenvector x^2 - x holds at every n, so the
        # limit coefficient must be -1 for every alpha
        for q in [F(3, 2), F(2), F(3)]:
            for alpha in [F(0), F(1, 2), F(1)]:
                assert limit_coeffs_q_above_1(q, alpha, 2).coeffs == (0, -1, 1)

    def test_ratio_alpha_one_specialization(self):
        for k in range(2, 6):
            for j in range(1, k):
                got = limit_ratio_q_above_1(F(2), F(1), k, j)
                denom = sum(q_integer(t, F(2)) for t in range(k - j, k))
                assert got == -q_stirling2(k - j + 1, k - j, F(2)) / denom

    def test_ratio_range_guards(self):
        with pytest.raises(RegimeError):
            limit_ratio_q_above_1(F(1, 2), F(0), 3, 1)
        with pytest.raises(ValueError):
            limit_ratio_q_above_1(F(2), F(0), 3, 3)

    def test_finite_ratios_converge_to_corrected(self):
        for q in [1.5, 2.0]:
            for alpha in [0.0, 0.5, 1.0]:
                for k in range(2, 6):
                    for j in range(1, k):
                        want = limit_ratio_q_above_1(q, alpha, k, j)
                        e30 = abs(finite_ratio(q, alpha, k, j, j - 1, 30) - want)
                        e60 = abs(finite_ratio(q, alpha, k, j, j - 1, 60) - want)
                        assert e60 <= e30 + 1e-9
                        assert e60 < 1e-6, (q, alpha, k, j, e60)

    def test_finite_ratios_diverge_from_uncorrected(self):
        for q in [1.5, 2.0]:
            for alpha in [0.0, 0.5]:
                got = finite_ratio(q, alpha, 3, 1, 0, 60)
                literal = _limit_ratio_q_above_1_literal(q, alpha, 3, 1)
                corrected = limit_ratio_q_above_1(q, alpha, 3, 1)
                assert abs(got - corrected) < 1e-9
                assert abs(got - literal) > 0.05

    def test_lower_order_ratios_vanish(self):
        for alpha in [0.0, 0.5, 1.0]:
            for k in range(3, 6):
                for j in range(2, k):
                    for i in range(j - 1):
                        r30 = abs(finite_ratio(2.0, alpha, k, j, i, 30))
                        r60 = abs(finite_ratio(2.0, alpha, k, j, i, 60))
                        assert r60 <= r30 + 1e-9
                        assert r60 < 1e-6

    def test_product_equals_recursion(self):
        # running the one-step recursion must agree exactly with taking the
        # product of ratio limits from scratch for each j
        for q in [F(3, 2), F(2)]:
            for alpha in [F(0), F(2, 5), F(1)]:
                for k in range(2, 6):
                    d = limit_coeffs_q_above_1(q, alpha, k).coeffs
                    for j in range(1, k):
                        product = F(1)
                        for i in range(1, k - j + 1):
                            product *= limit_ratio_q_above_1(q, alpha, k, i)
                        assert d[j] == product
                    assert d[k] == 1
                    assert d[0] == 0

    def test_alpha_dependence_survives(self):
        d0 = limit_coeffs_q_above_1(F(2), F(0), 3).coeffs
        d1 = limit_coeffs_q_above_1(F(2), F(1), 3).coeffs
        assert d0 != d1
        assert d0[1] == F(10, 27)

    def test_finite_coefficients_converge(self):
        for q in [1.5, 2.0]:
            for alpha in [0.0, 0.5, 1.0]:
                for k in range(2, 5):
                    d = limit_coeffs_q_above_1(q, alpha, k).coeffs
                    errs = []
                    for n in [20, 40, 80]:
                        c = eigenvector(k, OperatorParams(n, q, alpha))
                        errs.append(max(abs(c.coeff(j) - d[j]) for j in range(k + 1)))
                    assert errs[2] <= errs[1] + 1e-9 and errs[1] <= errs[0] + 1e-9
                    assert errs[2] < 1e-4

    def test_regime_guard(self):
        with pytest.raises(RegimeError):
            limit_coeffs_q_above_1(F(1, 2), F(0), 2)


class TestDispatch:
    def test_routes_by_regime(self):
        assert limit_coeffs(F(1, 2), F(0), 2).regime == Q_BELOW_1
        assert limit_coeffs(F(2), F(0), 2).regime == Q_ABOVE_1

    def test_q_one_rejected(self):
        with pytest.raises(RegimeError):
            limit_coeffs(F(1), F(0), 2)


class TestConvergenceTable:
    def test_degree_two_error_is_rounding_noise_at_most(self):
        # identically zero in exact mode (see test_exact_mode); float mode
        # may pick up one ulp in the recursion's division
        rows = convergence_table(F(1, 2), F(2, 5), 2, [10, 20, 40])
        assert len(rows) == 3 * 3
        assert all(r.abs_error < 1e-15 for r in rows)

    def test_errors_shrink(self):
        rows = convergence_table(F(1, 2), F(2, 5), 3, [25, 50, 100])
        worst = {}
        for r in rows:
            worst[r.n] = max(worst.get(r.n, 0.0), r.abs_error)
        assert worst[50] <= worst[25] + 1e-9
        assert worst[100] <= worst[50] + 1e-9
        assert worst[25] > 0

    def test_above_one(self):
        rows = convergence_table(F(2), F(0), 3, [20, 40, 80])
        worst = {r.n: 0.0 for r in rows}
        for r in rows:
            worst[r.n] = max(worst[r.n], r.abs_error)
        assert worst[80] <= worst[40] <= worst[20] + 1e-9
        assert worst[80] < 1e-4

    def test_exact_mode(self):
        rows = convergence_table(F(1, 2), F(1, 2), 2, [5, 10], mode="exact")
        assert all(isinstance(r.finite, F) for r in rows)
        assert all(r.abs_error == 0 for r in rows)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            convergence_table(F(1, 2), F(0), 3, [2])

    def test_q_one_rejected(self):
        with pytest.raises(RegimeError):
            convergence_table(F(1), F(0), 2, [10])
