"""Two-period open-economy general equilibrium with the interest rate as an input."""

from .model import (Demography, DomainError, Equilibrium, Fiscal,
                    InfeasibleError, ModelInstance, Preferences, Technology,
                    annualize_rate, capital_demand, dividends, euler_growth,
                    future_wage, government_t1, labor_supply_present,
                    lifetime_utility, output, q_factor, saving_decomposition,
                    solve_at_rate, wage_mpl, welfare)
from .closure import (BracketError, ClosureDiagnostics, ClosureSpec,
                      ConvergenceError, calibrated_labor_weight, resolve_rate,
                      welfare_stationarity_check)
from .scenarios import (ReferenceRow, Scenario, apply_scenario, paper_suite,
                        report_row, run_suite)
from .schedules import ScheduleCurve, compute_schedules, slope_check
from .reference import baseline_instance

__all__ = [
    "Demography", "DomainError", "Equilibrium", "Fiscal", "InfeasibleError",
    "ModelInstance", "Preferences", "Technology",
    "annualize_rate", "capital_demand", "dividends", "euler_growth",
    "future_wage", "government_t1", "labor_supply_present",
    "lifetime_utility", "output", "q_factor", "saving_decomposition",
    "solve_at_rate", "wage_mpl", "welfare",
    "BracketError", "ClosureDiagnostics", "ClosureSpec", "ConvergenceError",
    "calibrated_labor_weight", "resolve_rate", "welfare_stationarity_check",
    "ReferenceRow", "Scenario", "apply_scenario", "paper_suite",
    "report_row", "run_suite",
    "ScheduleCurve", "compute_schedules", "slope_check",
    "baseline_instance",
]

__version__ = "0.1.0"
