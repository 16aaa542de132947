"""Unit tests for the core model operations against frozen expected values."""

import math
from dataclasses import replace

import numpy as np
import pytest

from openecon import (Demography, DomainError, Fiscal, ModelInstance,
                      Preferences, Technology, annualize_rate, capital_demand,
                      dividends, euler_growth, future_wage, government_t1,
                      labor_supply_present, lifetime_utility, output,
                      q_factor, saving_decomposition, solve_at_rate, wage_mpl,
                      welfare)
from openecon.closure import ClosureSpec, resolve_rate

BASE_TECH = Technology(alpha=0.5, delta=1.0, a0=1.0, a1=1.0)
BASE_PREFS = Preferences(gamma=1.2, theta=9.0, rho=0.5)
L1_BASE = 294400.0


class TestCapitalDemand:
    def test_baseline(self):
        assert capital_demand(BASE_TECH, L1_BASE, 0.4821) == \
            pytest.approx(33504.96, rel=2e-3)

    def test_unit_ratio(self):
        tech = Technology(alpha=0.5, delta=0.5)
        assert capital_demand(tech, L1_BASE, 0.0) == L1_BASE

    def test_higher_rho_rate(self):
        # the discount-rate perturbation leaves technology unchanged
        assert capital_demand(BASE_TECH, L1_BASE, 0.5560) == \
            pytest.approx(30397.05, rel=2e-3)

    def test_decreasing_in_r(self):
        rates = np.linspace(0.1, 1.0, 25)
        values = [capital_demand(BASE_TECH, L1_BASE, r) for r in rates]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_inadmissible_rate(self):
        with pytest.raises(DomainError):
            capital_demand(BASE_TECH, L1_BASE, -1.0)
        with pytest.raises(DomainError):
            capital_demand(Technology(alpha=0.5, delta=0.3), L1_BASE, -0.3)

    def test_bad_hours(self):
        with pytest.raises(DomainError):
            capital_demand(BASE_TECH, 0.0, 0.4821)


class TestOutput:
    def test_future_baseline(self):
        assert output(33504.96, 1.0, L1_BASE, 0.5) == \
            pytest.approx(99316.97, rel=2e-3)

    def test_identity(self):
        for alpha in (0.2, 0.5, 0.8):
            assert output(1.0, 1.0, 1.0, alpha) == 1.0

    def test_present_baseline(self):
        # hand oracle: sqrt(K * L) at alpha = 1/2
        expected = math.sqrt(31756.0 * 293200.0)
        assert output(31756.0, 1.0, 293200.0, 0.5) == pytest.approx(expected)
        assert expected == pytest.approx(96492.0, rel=2e-3)

    def test_degree_one_homogeneity(self):
        y = output(31756.0, 1.0, 293200.0, 0.4)
        assert output(2 * 31756.0, 1.0, 2 * 293200.0, 0.4) == \
            pytest.approx(2 * y, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            output(0.0, 1.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            output(1.0, 1.0, -1.0, 0.5)


class TestWageMpl:
    def test_present(self):
        assert wage_mpl(96492.12, 293200.0, 0.5) == pytest.approx(0.1646, rel=1e-3)

    def test_unit(self):
        assert wage_mpl(1.0, 1.0, 0.5) == 0.5

    def test_future(self):
        assert wage_mpl(99316.97, L1_BASE, 0.5) == pytest.approx(0.1687, rel=1e-3)

    def test_factor_payment_identity(self):
        y, L, alpha = 96492.12, 293200.0, 0.5
        assert wage_mpl(y, L, alpha) * L == pytest.approx((1 - alpha) * y, rel=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            wage_mpl(1.0, 0.0, 0.5)


class TestFutureWage:
    def test_baseline(self):
        assert future_wage(BASE_TECH, 0.4821) == pytest.approx(0.168680, abs=1e-4)

    def test_unit_ratio(self):
        assert future_wage(Technology(alpha=0.5, delta=0.5), 0.0) == 0.5

    def test_higher_a1(self):
        tech = Technology(alpha=0.5, delta=1.0, a1=1.15)
        assert future_wage(tech, 0.4979) == pytest.approx(0.1919, rel=1e-3)

    def test_matches_composed_pipeline(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            L1 = rng.uniform(10.0, 1e6)
            r = rng.uniform(0.05, 1.5)
            k1 = capital_demand(BASE_TECH, L1, r)
            composed = wage_mpl(output(k1, BASE_TECH.a1, L1, BASE_TECH.alpha),
                                L1, BASE_TECH.alpha)
            assert future_wage(BASE_TECH, r) == pytest.approx(composed, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            future_wage(BASE_TECH, -1.5)


class TestLaborSupply:
    def test_baseline(self, baseline):
        l0, binding = labor_supply_present(baseline, 0.4821, 0.168680)
        assert l0 == pytest.approx(29320.0, rel=1e-3)
        assert not binding

    def test_symmetry(self, baseline):
        # with w1 chosen so beta*w0*(1+r)/w1 = 1 at l0 = l1, hours equalize
        d, t = baseline.demography, baseline.technology
        r = 0.25
        w0_at_l1 = (1 - t.alpha) * baseline.k0 ** t.alpha * \
            t.a0 ** (1 - t.alpha) * (d.n0 * d.l1_max) ** (-t.alpha)
        w1 = baseline.preferences.beta * (1 + r) * w0_at_l1
        l0, binding = labor_supply_present(baseline, r, w1)
        assert l0 == pytest.approx(d.l1_max, rel=1e-12)
        assert not binding

    def test_clamp(self, baseline):
        low_cap = replace(baseline,
                          demography=replace(baseline.demography, l0_max=20000.0))
        l0, binding = labor_supply_present(low_cap, 0.4821, 0.168680)
        assert l0 == 20000.0
        assert binding

    def test_domain(self, baseline):
        with pytest.raises(DomainError):
            labor_supply_present(baseline, 0.4821, 0.0)
        with pytest.raises(DomainError):
            labor_supply_present(baseline, -1.0, 0.1687)


class TestEulerGrowth:
    def test_baseline(self):
        # oracle: published C1/C0 = 77161.10 / 77935.89
        assert euler_growth(BASE_PREFS, 0.4821) == pytest.approx(0.99005, abs=1e-4)

    def test_stationary(self):
        for gamma in (0.7, 1.0, 2.5):
            prefs = Preferences(gamma=gamma, theta=9.0, rho=0.5)
            assert euler_growth(prefs, 0.5) == pytest.approx(1.0, rel=1e-12)

    def test_higher_a1_rate(self):
        assert euler_growth(BASE_PREFS, 0.4979) == pytest.approx(0.99883, abs=1e-4)


class TestQFactor:
    def test_baseline(self):
        assert q_factor(BASE_PREFS, 0.4821) == pytest.approx(1.66799, abs=1e-4)

    def test_log_like_limit(self):
        prefs = Preferences(gamma=1.2, theta=9.0, rho=1e-12)
        assert q_factor(prefs, 0.0) == pytest.approx(2.0, abs=1e-9)

    def test_higher_rho(self):
        prefs = Preferences(gamma=1.2, theta=9.0, rho=0.575)
        assert q_factor(prefs, 0.5560) == pytest.approx(1.63621, abs=1e-4)

    def test_exceeds_one(self):
        for r in np.linspace(-0.5, 2.0, 11):
            assert q_factor(BASE_PREFS, r) > 1.0


class TestGovernment:
    def test_no_government(self):
        assert government_t1(Fiscal(), 0.4821) == 0.0

    def test_balanced_period0(self):
        assert government_t1(Fiscal(g0=10.0, t0=10.0), 0.77) == 0.0

    def test_deferred_spending(self):
        assert government_t1(Fiscal(g1=5.0), 0.5) == 5.0

    def test_pv_budget(self):
        fiscal = Fiscal(g0=7.0, g1=3.0, t0=2.0)
        for r in (0.1, 0.5, 1.2):
            t1 = government_t1(fiscal, r)
            lhs = fiscal.t0 + t1 / (1 + r)
            rhs = fiscal.g0 + fiscal.g1 / (1 + r)
            assert lhs == pytest.approx(rhs, rel=1e-14)


class TestDividends:
    def test_present(self):
        assert dividends(96492.12, 48246.06 / 293200.0, 293200.0,
                         33504.96, 10.0) == pytest.approx(1474.1, rel=5e-3)

    def test_zero_profit(self):
        assert dividends(10.0, 1.0, 10.0, 0.0, 4.0) == 0.0

    def test_future(self):
        x1 = dividends(99316.97, 49658.49 / L1_BASE, L1_BASE, 0.0, 10.0)
        assert x1 == pytest.approx(4965.85, rel=5e-3)
        # capital income cross-check: (delta+r) * K1 / N1
        assert x1 == pytest.approx(1.4821 * 33504.96 / 10.0, rel=5e-3)

    def test_domain(self):
        with pytest.raises(DomainError):
            dividends(1.0, 1.0, 1.0, 0.0, 0.0)


class TestSolveAtRate:
    def test_baseline_column(self, baseline_eq):
        eq = baseline_eq
        assert eq.y0 == pytest.approx(96492.12, rel=2e-3)
        assert eq.y1 == pytest.approx(99316.97, rel=2e-3)
        assert eq.l0 == pytest.approx(29320.0, rel=2e-3)
        assert eq.i0 == pytest.approx(33504.96, rel=2e-3)
        assert eq.C0 == pytest.approx(77935.89, rel=2e-3)
        assert eq.C1 == pytest.approx(77161.10, rel=2e-3)
        assert eq.tb0 == pytest.approx(-14948.74, rel=2e-3)
        assert not eq.l0_binding

    def test_higher_a1_column(self, baseline):
        instance = replace(baseline,
                           technology=replace(baseline.technology, a1=1.15))
        eq = solve_at_rate(instance, 0.4979)
        assert eq.y0 == pytest.approx(95891.88, rel=2e-3)
        assert eq.y1 == pytest.approx(113010.11, rel=2e-3)
        assert eq.l0 == pytest.approx(28956.36, rel=2e-3)
        assert eq.i0 == pytest.approx(37722.37, rel=2e-3)
        assert eq.C0 == pytest.approx(80161.13, rel=2e-3)
        assert eq.tb0 == pytest.approx(-21991.62, rel=2e-3)

    def test_walras_identity(self, baseline):
        for r in np.linspace(0.1, 1.0, 10):
            eq = solve_at_rate(baseline, r)
            assert abs(eq.tb0 + eq.tb1 / (1 + r)) <= 1e-9 * eq.y0

    def test_structural_invariants(self, baseline_eq, baseline):
        eq = baseline_eq
        assert eq.q > 1.0
        assert eq.i0 == eq.k1 - (1 - baseline.technology.delta) * baseline.k0
        assert eq.l0 <= baseline.demography.l0_max
        assert eq.l1 == baseline.demography.l1_max

    def test_deterministic(self, baseline):
        assert solve_at_rate(baseline, 0.4821) == solve_at_rate(baseline, 0.4821)

    def test_inadmissible_rate(self, baseline):
        with pytest.raises(DomainError):
            solve_at_rate(baseline, -1.5)


class TestSavingDecomposition:
    def test_baseline(self, baseline_eq):
        s0n, s1x = saving_decomposition(baseline_eq)
        assert s0n == pytest.approx(18556.0, rel=5e-3)
        assert s1x == pytest.approx(14949.0, rel=5e-3)

    def test_autarky(self, baseline):
        spec = ClosureSpec(kind="balanced_trade", bracket=(0.4821, 2.0))
        r_star, _ = resolve_rate(baseline, spec)
        eq = solve_at_rate(baseline, r_star)
        s0n, s1x = saving_decomposition(eq)
        assert abs(s1x) <= 1e-9 * eq.y0
        assert s0n == pytest.approx(eq.i0, rel=1e-9)

    def test_higher_rho(self, baseline):
        instance = replace(baseline,
                           preferences=replace(baseline.preferences, rho=0.575))
        eq = solve_at_rate(instance, 0.5560)
        assert saving_decomposition(eq)[1] == pytest.approx(11359.92, rel=5e-3)

    def test_identity(self, baseline_eq):
        s0n, s1x = saving_decomposition(baseline_eq)
        assert s0n + s1x == pytest.approx(baseline_eq.i0, rel=1e-12)


class TestWelfare:
    def test_unit_consumption(self):
        prefs = Preferences(gamma=2.0, theta=9.0, rho=1.0)
        assert lifetime_utility(1.0, 0.0, 1.0, 0.0, prefs) == pytest.approx(-1.5)

    def test_log_limit(self):
        # levels carry a 1/(1-gamma) constant, so continuity at gamma = 1
        # holds for utility differences (the constant cancels)
        for eps in (1e-6, -1e-6):
            log_prefs = Preferences(gamma=1.0, theta=9.0, rho=0.5)
            near_prefs = Preferences(gamma=1.0 + eps, theta=9.0, rho=0.5)
            diff_log = (lifetime_utility(2.0, 0.5, 3.0, 0.4, log_prefs)
                        - lifetime_utility(5.0, 0.5, 7.0, 0.4, log_prefs))
            diff_near = (lifetime_utility(2.0, 0.5, 3.0, 0.4, near_prefs)
                         - lifetime_utility(5.0, 0.5, 7.0, 0.4, near_prefs))
            assert diff_log == pytest.approx(diff_near, abs=1e-5)

    def test_monotone_decreasing_in_r(self, baseline):
        # the home economy borrows in the present period, so a higher rate hurts
        rates = np.linspace(0.43, 0.53, 11)
        values = [solve_at_rate(baseline, r).welfare for r in rates]
        assert all(math.isfinite(v) for v in values)
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_welfare_matches_equilibrium_field(self, baseline, baseline_eq):
        assert welfare(baseline_eq, baseline.preferences) == baseline_eq.welfare

    def test_domain(self):
        with pytest.raises(DomainError):
            lifetime_utility(-1.0, 0.0, 1.0, 0.0, BASE_PREFS)


class TestAnnualize:
    def test_baseline_rate(self):
        assert annualize_rate(0.4821, 16) == pytest.approx(0.0249, abs=5e-4)
        assert round(annualize_rate(0.4821, 16), 4) == 0.0249

    def test_zero(self):
        for years in (1, 16, 50):
            assert annualize_rate(0.0, years) == 0.0

    def test_discount_rate(self):
        assert annualize_rate(0.5, 16) == pytest.approx(0.02566, abs=1e-5)
        assert round(annualize_rate(0.5, 16), 3) == 0.026

    def test_domain(self):
        with pytest.raises(DomainError):
            annualize_rate(-1.0, 16)
        with pytest.raises(DomainError):
            annualize_rate(0.5, 0)


class TestValidation:
    def test_preferences(self):
        with pytest.raises(DomainError):
            Preferences(gamma=0.0, theta=9.0, rho=0.5)
        with pytest.raises(DomainError):
            Preferences(gamma=1.2, theta=9.0, rho=-0.1)
        assert 0.0 < BASE_PREFS.beta < 1.0

    def test_technology(self):
        with pytest.raises(DomainError):
            Technology(alpha=1.0, delta=1.0)
        with pytest.raises(DomainError):
            Technology(alpha=0.5, delta=1.5)

    def test_demography(self):
        with pytest.raises(DomainError):
            Demography(n0=0.0, n1=10.0, l0_max=1.0, l1_max=1.0)

    def test_fiscal(self):
        with pytest.raises(DomainError):
            Fiscal(g0=-1.0)

    def test_instance(self, baseline):
        with pytest.raises(DomainError):
            replace(baseline, k0=0.0)
        with pytest.raises(DomainError):
            replace(baseline, years_per_period=0.0)
