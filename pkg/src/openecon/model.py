"""Core two-period open-economy model.

Evaluates the full equation system of a two-period economy (present = 0,
future = 1) at a *given* real interest rate r.  The rate is treated as an
input throughout: the system has one redundancy (the intertemporal external
balance follows from the household, firm, and government budget relations),
so any admissible r yields an internally consistent equilibrium.  Rate
selection strategies live in :mod:`openecon.closure`.

All functions are pure; identical inputs produce bit-identical outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Admissibility floor for the gross return delta + r.
MIN_GROSS_RETURN = 1e-9


class DomainError(ValueError):
    """An input lies outside the admissible domain of an operation."""


class InfeasibleError(ValueError):
    """The household's present-value income is non-positive at this rate."""


# ---------------------------------------------------------------------------
# Parameter blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Preferences:
    """Household preference parameters.

    gamma : inverse intertemporal elasticity of substitution (> 0)
    theta : inverse Frisch elasticity of labor supply (> 0)
    rho   : subjective discount rate per period (> 0)
    phi   : labor-disutility weight (> 0); affects welfare levels only,
            never equilibrium quantities
    """

    gamma: float
    theta: float
    rho: float
    phi: float = 1.0

    def __post_init__(self):
        if not (self.gamma > 0 and self.theta > 0 and self.rho > 0 and self.phi > 0):
            raise DomainError("gamma, theta, rho, phi must all be positive")

    @property
    def beta(self) -> float:
        """Discount factor 1/(1+rho), in (0, 1)."""
        return 1.0 / (1.0 + self.rho)


@dataclass(frozen=True)
class Technology:
    """Production-side parameters.

    alpha : output elasticity of capital, in (0, 1)
    delta : depreciation rate per period, in (0, 1]
    a0/a1 : labor efficiency in the present/future period (> 0)
    """

    alpha: float
    delta: float
    a0: float = 1.0
    a1: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError("alpha must lie in (0, 1)")
        if not 0.0 < self.delta <= 1.0:
            raise DomainError("delta must lie in (0, 1]")
        if not (self.a0 > 0 and self.a1 > 0):
            raise DomainError("labor efficiencies must be positive")


@dataclass(frozen=True)
class Demography:
    """Household counts and time endowments per period."""

    n0: float
    n1: float
    l0_max: float
    l1_max: float

    def __post_init__(self):
        if not (self.n0 > 0 and self.n1 > 0 and self.l0_max > 0 and self.l1_max > 0):
            raise DomainError("household counts and time endowments must be positive")


@dataclass(frozen=True)
class Fiscal:
    """Government purchases g0, g1 and period-0 total tax revenue t0."""

    g0: float = 0.0
    g1: float = 0.0
    t0: float = 0.0

    def __post_init__(self):
        if self.g0 < 0 or self.g1 < 0:
            raise DomainError("government purchases must be non-negative")


@dataclass(frozen=True)
class ModelInstance:
    """A complete parameterization of the two-period economy."""

    preferences: Preferences
    technology: Technology
    demography: Demography
    fiscal: Fiscal
    k0: float
    years_per_period: float = 16.0

    def __post_init__(self):
        if self.k0 <= 0:
            raise DomainError("initial capital k0 must be positive")
        if self.years_per_period <= 0:
            raise DomainError("years_per_period must be positive")


@dataclass(frozen=True)
class Equilibrium:
    """The full endogenous vector of the economy at a given rate r.

    Aggregates are upper-case (C0 = n0 * c0); per-household quantities are
    lower-case.  tb0/tb1 are net exports (only the net value is determined).
    """

    r: float
    y0: float
    y1: float
    k0: float
    k1: float
    L0: float
    L1: float
    l0: float
    l1: float
    w0: float
    w1: float
    c0: float
    c1: float
    C0: float
    C1: float
    x0: float
    x1: float
    tax0: float
    tax1: float
    T0: float
    T1: float
    tb0: float
    tb1: float
    i0: float
    q: float
    s0n: float
    s1x: float
    welfare: float
    l0_binding: bool


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------

def check_rate(tech: Technology, r: float) -> None:
    """Raise DomainError unless r > -1 and delta + r is bounded away from 0."""
    if r <= -1.0 or tech.delta + r <= MIN_GROSS_RETURN:
        raise DomainError(f"inadmissible rate r={r} (need r > -1 and delta + r > 0)")


def capital_demand(tech: Technology, L1: float, r: float) -> float:
    """Future capital demanded by the firm: A1 * L1 * (alpha/(delta+r))^(1/(1-alpha)).

    Strictly decreasing in r, and (whenever delta + r > alpha) strictly
    decreasing in alpha.
    """
    check_rate(tech, r)
    if L1 <= 0:
        raise DomainError("aggregate future hours L1 must be positive")
    return tech.a1 * L1 * (tech.alpha / (tech.delta + r)) ** (1.0 / (1.0 - tech.alpha))


def output(K: float, A: float, L: float, alpha: float) -> float:
    """Cobb-Douglas output K^alpha * (A*L)^(1-alpha)."""
    if K <= 0 or A <= 0 or L <= 0:
        raise DomainError("output requires positive capital, efficiency and hours")
    return K ** alpha * (A * L) ** (1.0 - alpha)


def wage_mpl(Y: float, L: float, alpha: float) -> float:
    """Competitive hourly wage (1-alpha) * Y / L (marginal product of labor)."""
    if L <= 0:
        raise DomainError("aggregate hours must be positive")
    return (1.0 - alpha) * Y / L


def future_wage(tech: Technology, r: float) -> float:
    """Future wage implied by the firm's capital choice.

    Substituting capital demand into the marginal-product condition makes
    future hours cancel: w1 = (1-alpha) * A1 * (alpha/(delta+r))^(alpha/(1-alpha)).
    """
    check_rate(tech, r)
    a = tech.alpha
    return (1.0 - a) * tech.a1 * (a / (tech.delta + r)) ** (a / (1.0 - a))


def labor_supply_present(instance: ModelInstance, r: float, w1: float) -> tuple[float, bool]:
    """Present hours per household, with a flag for a binding time endowment.

    Solves the fixed point l0 = [beta * w0(l0) * (1+r) / w1]^(1/theta) * l1
    where w0 adjusts through the marginal product as hours change.  The
    closed form has exponent 1/(theta+alpha); the result is clamped to
    l0_max and the flag reports whether the clamp applied.
    """
    if r <= -1.0:
        raise DomainError("rate must exceed -1")
    if w1 <= 0:
        raise DomainError("future wage must be positive")
    p, t, d = instance.preferences, instance.technology, instance.demography
    a = t.alpha
    base = (
        p.beta * (1.0 + r) * (1.0 - a)
        * instance.k0 ** a * t.a0 ** (1.0 - a) * d.n0 ** (-a)
        * d.l1_max ** p.theta / w1
    )
    l0 = base ** (1.0 / (p.theta + a))
    if l0 >= d.l0_max:
        return d.l0_max, True
    return l0, False


def euler_growth(prefs: Preferences, r: float) -> float:
    """Consumption growth factor c1/c0 = [beta*(1+r)]^(1/gamma)."""
    if r <= -1.0:
        raise DomainError("rate must exceed -1")
    return (prefs.beta * (1.0 + r)) ** (1.0 / prefs.gamma)


def q_factor(prefs: Preferences, r: float) -> float:
    """Consumption-function denominator Q = 1 + [beta*(1+r)]^(1/gamma) / (1+r).

    Always exceeds 1; Q * c0 equals per-household present-value income.
    """
    return 1.0 + euler_growth(prefs, r) / (1.0 + r)


def government_t1(fiscal: Fiscal, r: float) -> float:
    """Future tax revenue balancing the government's present-value budget.

    T1 = (1+r)*G0 + G1 - T0*(1+r), so T0 + T1/(1+r) = G0 + G1/(1+r) exactly.
    """
    if r <= -1.0:
        raise DomainError("rate must exceed -1")
    return (1.0 + r) * fiscal.g0 + fiscal.g1 - fiscal.t0 * (1.0 + r)


def dividends(Y: float, w: float, L: float, I: float, N: float) -> float:
    """Per-household dividend (Y - w*L - I) / N."""
    if N <= 0:
        raise DomainError("household count must be positive")
    return (Y - w * L - I) / N


def annualize_rate(per_period: float, years: float) -> float:
    """Per-year rate equivalent to a per-period rate: (1+r)^(1/years) - 1."""
    if per_period <= -1.0:
        raise DomainError("per-period rate must exceed -1")
    if years <= 0:
        raise DomainError("years must be positive")
    return (1.0 + per_period) ** (1.0 / years) - 1.0


# ---------------------------------------------------------------------------
# Welfare
# ---------------------------------------------------------------------------

def period_utility(c: float, l: float, prefs: Preferences) -> float:
    """Separable period utility: power function of c minus power function of l.

    At gamma = 1 the consumption term is log(c).  Away from 1 the term is
    c^(1-gamma)/(1-gamma), which differs from the normalized CRRA form by
    the constant 1/(1-gamma); utility *differences* are therefore continuous
    in gamma at 1, while levels diverge with the constant.
    """
    if c <= 0:
        raise DomainError("consumption must be positive")
    if prefs.gamma == 1.0:
        uc = math.log(c)
    else:
        uc = c ** (1.0 - prefs.gamma) / (1.0 - prefs.gamma)
    return uc - prefs.phi * l ** (1.0 + prefs.theta) / (1.0 + prefs.theta)


def lifetime_utility(c0: float, l0: float, c1: float, l1: float,
                     prefs: Preferences) -> float:
    """U = u(c0, l0) + beta * u(c1, l1)."""
    return period_utility(c0, l0, prefs) + prefs.beta * period_utility(c1, l1, prefs)


def welfare(eq: Equilibrium, prefs: Preferences) -> float:
    """Lifetime utility of the representative household at an equilibrium."""
    return lifetime_utility(eq.c0, eq.l0, eq.c1, eq.l1, prefs)


# ---------------------------------------------------------------------------
# Full solve
# ---------------------------------------------------------------------------

def solve_at_rate(instance: ModelInstance, r: float) -> Equilibrium:
    """Evaluate the complete equation system at the rate r.

    The future labor market is exogenous (l1 = l1_max), the firm picks
    future capital at the given r, the household splits its present-value
    income across the two periods, and the trade balances absorb the rest.
    """
    p, t, d, f = (instance.preferences, instance.technology,
                  instance.demography, instance.fiscal)
    check_rate(t, r)
    R = 1.0 + r

    l1 = d.l1_max
    L1 = d.n1 * l1
    w1 = future_wage(t, r)
    k1 = capital_demand(t, L1, r)
    y1 = output(k1, t.a1, L1, t.alpha)

    l0, binding = labor_supply_present(instance, r, w1)
    L0 = d.n0 * l0
    y0 = output(instance.k0, t.a0, L0, t.alpha)
    w0 = wage_mpl(y0, L0, t.alpha)

    i0 = k1 - (1.0 - t.delta) * instance.k0
    x0 = dividends(y0, w0, L0, i0, d.n0)
    x1 = dividends(y1, w1, L1, 0.0, d.n1)

    T1 = government_t1(f, r)
    tax0 = f.t0 / d.n0
    tax1 = T1 / d.n1

    income = w0 * l0 + w1 * l1 / R + x0 + x1 / R - tax0 - tax1 / R
    if income <= 0:
        raise InfeasibleError(
            f"present-value income per household is {income} at r={r}")

    q = q_factor(p, r)
    c0 = income / q
    c1 = c0 * euler_growth(p, r)
    C0 = d.n0 * c0
    C1 = d.n1 * c1

    tb0 = y0 - C0 - i0 - f.g0
    tb1 = y1 - C1 - f.g1
    s0n = y0 - C0 - f.g0
    s1x = tb1 / R
    U = lifetime_utility(c0, l0, c1, l1, p)

    return Equilibrium(
        r=r, y0=y0, y1=y1, k0=instance.k0, k1=k1, L0=L0, L1=L1,
        l0=l0, l1=l1, w0=w0, w1=w1, c0=c0, c1=c1, C0=C0, C1=C1,
        x0=x0, x1=x1, tax0=tax0, tax1=tax1, T0=f.t0, T1=T1,
        tb0=tb0, tb1=tb1, i0=i0, q=q, s0n=s0n, s1x=s1x,
        welfare=U, l0_binding=binding,
    )


def saving_decomposition(eq: Equilibrium) -> tuple[float, float]:
    """(national saving, external saving): s0n + s1x = i0 up to roundoff."""
    return eq.s0n, eq.s1x
