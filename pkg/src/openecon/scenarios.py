"""Comparative-statics scenario engine.

A Scenario names a set of parameter overrides/perturbations on a baseline
instance plus the rate at which to solve it (or a closure rule that picks
one).  run_suite solves every scenario, assembles the standard result rows,
compares them against reference columns where available, and runs the
cross-scenario directional checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import reference
from .closure import ClosureSpec, resolve_rate
from .model import Equilibrium, ModelInstance, annualize_rate, solve_at_rate

# parameter path -> (sub-block attribute or None for top level, field name)
PARAMETER_PATHS: dict[str, tuple[str | None, str]] = {
    "gamma": ("preferences", "gamma"),
    "theta": ("preferences", "theta"),
    "rho": ("preferences", "rho"),
    "phi": ("preferences", "phi"),
    "alpha": ("technology", "alpha"),
    "delta": ("technology", "delta"),
    "a0": ("technology", "a0"),
    "a1": ("technology", "a1"),
    "n0": ("demography", "n0"),
    "n1": ("demography", "n1"),
    "l0_max": ("demography", "l0_max"),
    "l1_max": ("demography", "l1_max"),
    "g0": ("fiscal", "g0"),
    "g1": ("fiscal", "g1"),
    "t0": ("fiscal", "t0"),
    "k0": (None, "k0"),
    "years_per_period": (None, "years_per_period"),
}

# Spellings used in instance/scenario files, mapped to canonical paths.
PARAMETER_ALIASES: dict[str, str] = {
    "a0": "a0", "a1": "a1", "n0": "n0", "n1": "n1", "k0": "k0",
    "tax0": "t0", "g0": "g0", "g1": "g1",
}


def canonical_parameter(name: str) -> str:
    """Normalize a parameter spelling (e.g. 'A1', 'tax0') to its path."""
    key = name.strip()
    if key in PARAMETER_PATHS:
        return key
    lowered = key.lower()
    if lowered in PARAMETER_ALIASES:
        return PARAMETER_ALIASES[lowered]
    if lowered in PARAMETER_PATHS:
        return lowered
    raise KeyError(f"unknown parameter {name!r}")


@dataclass(frozen=True)
class ReferenceRow:
    """Expected values for the standard result rows, keyed as in ROW_KEYS."""

    values: dict[str, float]
    tolerance: float = 2e-3


@dataclass(frozen=True)
class Scenario:
    """A named variation of a baseline instance, solved at a given rate.

    overrides set parameters to absolute values; perturbations multiply
    them.  A parameter may appear in at most one of the two.  Either `rate`
    or `closure` must be set.
    """

    name: str
    rate: float | None = None
    overrides: dict[str, float] = field(default_factory=dict)
    perturbations: dict[str, float] = field(default_factory=dict)
    closure: ClosureSpec | None = None
    reference: ReferenceRow | None = None

    def __post_init__(self):
        dup = set(self.overrides) & set(self.perturbations)
        if dup:
            raise ValueError(f"parameters in both overrides and perturbations: {dup}")
        if self.rate is None and self.closure is None:
            raise ValueError(f"scenario {self.name!r} needs a rate or a closure")


def _get_parameter(instance: ModelInstance, path: str) -> float:
    block, name = PARAMETER_PATHS[canonical_parameter(path)]
    holder = instance if block is None else getattr(instance, block)
    return getattr(holder, name)


def _set_parameter(instance: ModelInstance, path: str, value: float) -> ModelInstance:
    block, name = PARAMETER_PATHS[canonical_parameter(path)]
    if block is None:
        return replace(instance, **{name: value})
    sub = replace(getattr(instance, block), **{name: value})
    return replace(instance, **{block: sub})


def apply_scenario(base: ModelInstance, s: Scenario) -> ModelInstance:
    """Return a new instance with the scenario's changes; base is untouched."""
    out = base
    for path, value in s.overrides.items():
        out = _set_parameter(out, path, value)
    for path, factor in s.perturbations.items():
        out = _set_parameter(out, path, _get_parameter(out, path) * factor)
    return out


def report_row(eq: Equilibrium, instance: ModelInstance) -> dict[str, float]:
    """The standard result rows (levels and ratios) for one equilibrium."""
    return {
        "tb0": eq.tb0,
        "r": eq.r,
        "r_year": annualize_rate(eq.r, instance.years_per_period),
        "i0": eq.i0,
        "y1": eq.y1,
        "y0": eq.y0,
        "l0": eq.l0,
        "C0": eq.C0,
        "C1": eq.C1,
        "i0_y0": eq.i0 / eq.y0,
        "c0_y0": eq.C0 / eq.y0,
        "wage_ratio": eq.w0 / (eq.w1 / (1.0 + eq.r)),
        "tb0_y0": eq.tb0 / eq.y0,
        "w0": eq.w0,
        "w0_r": eq.w0 / eq.r,
        "w1": eq.w1,
    }


def row_deviation(computed: float, expected: float) -> float:
    """Relative deviation for levels, absolute for values below 1 in magnitude."""
    if abs(expected) < 1.0:
        return abs(computed - expected)
    return abs(computed - expected) / abs(expected)


@dataclass
class ScenarioResult:
    name: str
    rate: float
    instance: ModelInstance
    equilibrium: Equilibrium
    rows: dict[str, float]
    reference: ReferenceRow | None
    deviations: dict[str, float] = field(default_factory=dict)
    failed_rows: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.failed_rows


@dataclass
class SignCheck:
    name: str
    passed: bool
    detail: str


@dataclass
class SuiteReport:
    results: list[ScenarioResult]
    sign_checks: list[SignCheck]

    @property
    def passed(self) -> bool:
        return (all(r.passed for r in self.results)
                and all(c.passed for c in self.sign_checks))


def _run_one(base: ModelInstance, s: Scenario) -> ScenarioResult:
    instance = apply_scenario(base, s)
    rate = s.rate
    if rate is None:
        rate, _ = resolve_rate(instance, s.closure)
    eq = solve_at_rate(instance, rate)
    rows = report_row(eq, instance)
    result = ScenarioResult(name=s.name, rate=rate, instance=instance,
                            equilibrium=eq, rows=rows, reference=s.reference)
    if s.reference is not None:
        for key, expected in s.reference.values.items():
            dev = row_deviation(rows[key], expected)
            result.deviations[key] = dev
            if dev > s.reference.tolerance:
                result.failed_rows.append(key)
    return result


def _sign_checks(by_param: dict[str | None, ScenarioResult]) -> list[SignCheck]:
    """Directional comparisons of each one-parameter scenario vs baseline."""
    base = by_param.get(None)
    if base is None:
        return []
    checks: list[SignCheck] = []
    b = base.rows

    def add(name, conditions):
        failures = [label for label, ok in conditions if not ok]
        checks.append(SignCheck(
            name=name, passed=not failures,
            detail="all directions hold" if not failures
            else "violated: " + ", ".join(failures)))

    if "gamma" in by_param:
        s = by_param["gamma"].rows
        add("higher gamma: investment unchanged, deficit nearly unchanged", [
            ("i0 unchanged", s["i0"] == b["i0"]),
            ("|dtb0| < 0.5% of y0", abs(s["tb0"] - b["tb0"]) < 0.005 * b["y0"]),
        ])
    if "theta" in by_param:
        s = by_param["theta"].rows
        add("higher theta: rate up, wage down, present output and hours up", [
            ("r up", s["r"] > b["r"]),
            ("w0 down", s["w0"] < b["w0"]),
            ("y0 up", s["y0"] > b["y0"]),
            ("l0 up", s["l0"] > b["l0"]),
        ])
    if "rho" in by_param:
        s = by_param["rho"].rows
        add("higher rho: rate, hours, output up; investment, consumption, deficit down", [
            ("r up", s["r"] > b["r"]),
            ("l0 up", s["l0"] > b["l0"]),
            ("y0 up", s["y0"] > b["y0"]),
            ("i0 down", s["i0"] < b["i0"]),
            ("C0 down", s["C0"] < b["C0"]),
            ("deficit down", abs(s["tb0"]) < abs(b["tb0"])),
        ])
    if "a1" in by_param:
        s = by_param["a1"].rows
        add("higher a1: rate, investment, consumption, wages, deficit up; hours and output down", [
            ("r up", s["r"] > b["r"]),
            ("i0 up", s["i0"] > b["i0"]),
            ("C0 up", s["C0"] > b["C0"]),
            ("w0 up", s["w0"] > b["w0"]),
            ("w1 up", s["w1"] > b["w1"]),
            ("l0 down", s["l0"] < b["l0"]),
            ("y0 down", s["y0"] < b["y0"]),
            ("deficit up", abs(s["tb0"]) > abs(b["tb0"])),
        ])
    return checks


def run_suite(base: ModelInstance, scenarios: list[Scenario]) -> SuiteReport:
    """Solve all scenarios, compare to references, run directional checks.

    Per-scenario failures are collected, not raised, so one bad scenario
    does not abort the suite.  Results keep the input order.
    """
    results = []
    by_param: dict[str | None, ScenarioResult] = {}
    for s in scenarios:
        try:
            result = _run_one(base, s)
        except (ValueError, KeyError) as exc:
            result = ScenarioResult(
                name=s.name, rate=s.rate if s.rate is not None else float("nan"),
                instance=base, equilibrium=None, rows={}, reference=s.reference,
                error=str(exc))
        results.append(result)
        if result.error is None:
            if not s.overrides and not s.perturbations:
                by_param.setdefault(None, result)
            elif not s.overrides and len(s.perturbations) == 1:
                (param,) = s.perturbations
                by_param.setdefault(canonical_parameter(param), result)
    return SuiteReport(results=results, sign_checks=_sign_checks(by_param))


def paper_suite(tolerance: float = 2e-3) -> list[Scenario]:
    """The embedded five-scenario comparative-statics suite with references."""
    scenarios = []
    for name, param, factor, rate in reference.SUITE_DESIGN:
        scenarios.append(Scenario(
            name=name,
            rate=rate,
            perturbations={} if param is None else {param: factor},
            reference=ReferenceRow(values=dict(reference.REFERENCE_TABLE[name]),
                                   tolerance=tolerance),
        ))
    return scenarios
