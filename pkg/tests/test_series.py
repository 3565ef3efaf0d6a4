"""Direct-summation oracles: frozen references, classical values, invariants."""

import math

import numpy as np
import pytest

from eulersums import (
    DomainError,
    EvalConfig,
    ZETA2,
    ZETA3,
    ZETA4,
    lhs_alt,
    lhs_base_binomial,
    lhs_binomial_shifted,
    lhs_central_binom,
    lhs_linear_euler,
    lhs_quadratic_euler,
    lhs_variant1,
    lhs_variant2,
    lhs_variant3,
    lhs_variant3h,
    lhs_variant4,
    riemann_zeta,
)
from eulersums.series import (
    K_CROSSOVER,
    _cache,
    half_shift_series,
    quadratic_minus_linear,
    zeta_power_series,
    zeta_tail_sum,
)
from eulersums.special import LN2

from conftest import REFS, assert_close

EM_TOL = 1e-11       # split-at-K + Euler-Maclaurin routes
DIRECT_TOL = 1e-9    # adaptive direct-summation routes (rel_tol 1e-10 + slack)


class TestVariant1:
    def test_euler_1775(self):
        r = lhs_variant1(0, 1)
        assert r.converged
        assert_close(r.value, ZETA3, 1e-12)

    def test_zeta4_quarter(self):
        assert_close(lhs_variant1(0, 2).value, ZETA4 / 4.0, 1e-12)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 2), (2, 3)])
    def test_frozen(self, n, m):
        assert_close(lhs_variant1(n, m).value, REFS[("v1", n, m)], EM_TOL)

    def test_brute_force_cross_check(self):
        # fast-decaying case summed raw to 2e5 terms: tail < 1e-17
        n, m, K = 3, 2, 200_000
        k = np.arange(1.0, K + 1.0)
        hk = np.cumsum(1.0 / k)
        inv_b = np.ones_like(k)
        for i in range(1, n + 1):
            inv_b *= i / (k + i)
        brute = math.fsum((hk * inv_b / (n + k + 1.0) ** (m + 1)).tolist())
        assert_close(lhs_variant1(n, m).value, brute, 1e-13)

    def test_divergence_guard(self):
        with pytest.raises(DomainError):
            lhs_variant1(0, 0)
        with pytest.raises(DomainError):
            lhs_variant1(-1, 2)


class TestVariant2:
    def test_stated_form(self):
        # denominator (k+1)^2 variant of the quadratic-harmonic sum
        assert_close(lhs_variant2(0, 1).value, 2.0 * ZETA4, 1e-11)

    def test_k_power_form(self):
        assert_close(quadratic_minus_linear(2).value, 2.5 * ZETA4, 1e-11)

    @pytest.mark.parametrize("n,m", [(0, 1), (0, 2), (2, 1), (2, 2), (3, 4)])
    def test_frozen(self, n, m):
        assert_close(lhs_variant2(n, m).value, REFS[("v2", n, m)], EM_TOL)


class TestAlt:
    def test_n_zero(self):
        assert_close(lhs_alt(0, 1).value, -ZETA2, 1e-12)

    def test_n_one_partial_fractions(self):
        # sum 1/((k+2)^2 (k+1)) telescopes to 2 - zeta(2)
        assert_close(lhs_alt(1, 1).value, 2.0 - ZETA2, 1e-11)

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 1), (3, 2)])
    def test_frozen(self, n, m):
        assert_close(lhs_alt(n, m).value, REFS[("t25", n, m)], EM_TOL)


class TestVariant3Family:
    def test_telescoping(self):
        assert_close(lhs_variant3(1.0, 0, 0).value, 1.0, 1e-12)

    def test_h_telescoping(self):
        assert_close(lhs_variant3h(1.0, 0, 0).value, 1.0, 1e-12)

    def test_variant4_exact_values(self):
        assert_close(lhs_variant4(1.0, 0, 1).value, 2.0, 1e-11)
        assert_close(lhs_variant4(1.0, 1, 1).value, 0.125, 1e-11)

    @pytest.mark.parametrize("p,n,m", [(1.0, 2, 1), (0.5, 1, 0), (2.5, 3, 2), (1.5, 0, 1)])
    def test_frozen_v3(self, p, n, m):
        assert_close(lhs_variant3(p, n, m).value, REFS[("v3", p, n, m)], EM_TOL)

    @pytest.mark.parametrize("p,n,m", [(1.0, 1, 1), (0.5, 2, 0), (2.5, 1, 2)])
    def test_frozen_v3h(self, p, n, m):
        assert_close(lhs_variant3h(p, n, m).value, REFS[("v3h", p, n, m)], EM_TOL)

    @pytest.mark.parametrize("p,n,m", [(0.5, 0, 2), (1.5, 2, 1), (2.5, 1, 3)])
    def test_frozen_v4(self, p, n, m):
        assert_close(lhs_variant4(p, n, m).value, REFS[("v4", p, n, m)], EM_TOL)

    def test_domain(self):
        with pytest.raises(DomainError):
            lhs_variant3(0.0, 0, 1)
        with pytest.raises(DomainError):
            lhs_variant3(-0.5, 0, 1)
        with pytest.raises(DomainError):
            lhs_variant4(1.0, 0, 0)


class TestCentralBinom:
    def test_unit_case(self):
        # paper's positive-sign form: sum (2H_2k - H_k) C(2k,k)/((k+1) 4^(k+1)) = 1
        r = lhs_central_binom(1.0, 0)
        assert_close(-r.value / 4.0, 1.0, 1e-11)

    def test_half_case(self):
        want = math.pi * (4.0 * LN2**2 - math.pi**2 / 6.0)
        assert_close(-lhs_central_binom(0.5, 1).value, want, 1e-11)

    def test_p_two_exact(self):
        # closed form reduces to -32/9 at (2, 0)
        assert_close(lhs_central_binom(2.0, 0).value, -32.0 / 9.0, 1e-11)

    def test_domain(self):
        with pytest.raises(DomainError):
            lhs_central_binom(-1.0, 0)
        with pytest.raises(DomainError):
            lhs_central_binom(1.0, -1)


class TestBaseBinomial:
    def test_integer_finite(self):
        assert_close(lhs_base_binomial(2.0, 1).value, 1.5, 1e-15)
        assert lhs_base_binomial(0.0, 3).value == 0.0

    @pytest.mark.parametrize("x,m", [(0.5, 1), (0.5, 2), (2.5, 1), (3.5, 3)])
    def test_frozen(self, x, m):
        r = lhs_base_binomial(x, m)
        assert r.converged
        assert_close(r.value, REFS[("e15", x, m)], DIRECT_TOL)

    def test_domain(self):
        with pytest.raises(DomainError):
            lhs_base_binomial(-1.5, 1)
        with pytest.raises(DomainError):
            lhs_base_binomial(0.5, 0)


class TestBinomialShifted:
    def test_x_zero_single_term(self):
        for p, m in ((1.5, 2), (0.5, 0)):
            assert_close(lhs_binomial_shifted(0.0, p, m).value, p ** -(m + 1), 1e-15)

    def test_x_one(self):
        assert_close(lhs_binomial_shifted(1.0, 1.0, 0).value, 0.5, 1e-15)

    def test_half_pi(self):
        # x = p = 1/2, m = 0 sums to the beta value pi/2
        r = lhs_binomial_shifted(0.5, 0.5, 0)
        assert_close(r.value, math.pi / 2.0, DIRECT_TOL)

    @pytest.mark.parametrize("x,p,m", [(0.5, 1.0, 1), (2.5, 0.5, 2), (1.5, 2.5, 3)])
    def test_frozen(self, x, p, m):
        assert_close(lhs_binomial_shifted(x, p, m).value, REFS[("t35", x, p, m)], DIRECT_TOL)


class TestEulerSums:
    def test_classical(self):
        assert_close(lhs_linear_euler(1, 2).value, 2.0 * ZETA3, 1e-11)
        assert_close(lhs_linear_euler(2, 2).value, 7.0 / 4.0 * ZETA4, 1e-11)
        assert_close(lhs_quadratic_euler(2).value, 17.0 / 4.0 * ZETA4, 1e-11)

    @pytest.mark.parametrize("p,q", [(2, 3), (2, 4), (3, 4)])
    def test_symmetry_relation(self, p, q):
        spq = lhs_linear_euler(p, q).value
        sqp = lhs_linear_euler(q, p).value
        want = riemann_zeta(float(p)) * riemann_zeta(float(q)) + riemann_zeta(float(p + q))
        assert_close(spq + sqp, want, 1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            lhs_linear_euler(0, 2)
        with pytest.raises(DomainError):
            lhs_quadratic_euler(1)


class TestIndexShiftBridge:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_bridge(self, m):
        # stated form = k-power form - (m+2) zeta(m+3) + sum zeta(k+1) zeta(m+2-k)
        stated = lhs_variant2(0, m).value
        power = quadratic_minus_linear(m + 1).value
        correction = -(m + 2) * riemann_zeta(m + 3.0) + math.fsum(
            riemann_zeta(k + 1.0) * riemann_zeta(float(m + 2 - k)) for k in range(1, m + 1)
        )
        assert_close(stated, power + correction, 1e-8)


class TestZetaTailSeries:
    def test_goldbach(self):
        r = zeta_tail_sum(0)
        assert r.converged
        assert_close(r.value, 1.0, 1e-12)

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_family(self, m):
        want = m + 1.0 - math.fsum(riemann_zeta(k + 1.0) for k in range(1, m + 1))
        assert_close(zeta_tail_sum(m).value, want, 1e-11)

    def test_power_series(self):
        assert_close(zeta_power_series(0.4, 1).value, REFS[("cor38", 0.4, 1)], 1e-11)
        with pytest.raises(DomainError):
            zeta_power_series(1.5, 1)


class TestHalfShift:
    def test_m_zero_closed_form(self):
        # 2 zeta(2) - 4 ln^2 2
        assert_close(half_shift_series(0).value, 2.0 * ZETA2 - 4.0 * LN2**2, 1e-11)

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_frozen(self, m):
        assert_close(half_shift_series(m).value, REFS[("cor310", -0.5, m)], EM_TOL)


class TestOracleContracts:
    def test_determinism(self):
        cfg = EvalConfig(rel_tol=1e-9)
        a = lhs_variant1(2, 2, cfg)
        b = lhs_variant1(2, 2, cfg)
        assert a == b

    def test_monotone_partial_sums(self):
        # positive-term series: partial sums never exceed value + tail_estimate
        res = lhs_variant1(1, 1)
        c = _cache()
        k = np.arange(1.0, 3001.0)
        terms = c.h1[1:3001] / ((k + 2.0) ** 2 * (k + 1.0))
        partials = np.cumsum(terms)
        assert (np.diff(partials) >= 0.0).all()
        assert (partials <= res.value + res.tail_estimate).all()

    def test_terms_used_reports_crossover(self):
        assert lhs_variant1(0, 1).terms_used == K_CROSSOVER

    def test_tail_estimate_meets_contract(self):
        r = lhs_variant1(0, 1)
        assert r.converged
        assert r.tail_estimate <= 1e-10 * max(1.0, abs(r.value))
