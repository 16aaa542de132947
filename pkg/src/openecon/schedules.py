"""Saving and investment schedules on a rate grid.

Two modes:

* full_equilibrium — every grid point is a complete solve, so national plus
  external saving equals investment *identically* (the residual is pure
  roundoff).  The "intersection" of the curves is the whole curve; that is
  the formal content of treating the rate as an input.

* partial — reproduces the textbook crossing geometry.  The household's
  period income components and the future trade balance are frozen at a
  reference rate r_ref while present consumption responds to r through
  discounting and the intertemporal price, and investment responds through
  the firm's capital demand.  The curves coincide with the full solution at
  r_ref and cross there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import (DomainError, InfeasibleError, ModelInstance,
                    capital_demand, check_rate, q_factor, solve_at_rate)

MODES = ("full_equilibrium", "partial")


@dataclass
class ScheduleCurve:
    """I0, S0N, S1X per grid rate, with identity residuals and slopes."""

    grid: np.ndarray
    i0: np.ndarray
    s0n: np.ndarray
    s1x: np.ndarray
    residual: np.ndarray           # s0n + s1x - i0
    y0: np.ndarray                 # for scaling residual tolerances
    slopes: dict[str, np.ndarray]  # central-difference slope per curve
    mode: str
    r_ref: float | None = None
    errors: list[tuple[int, str]] = field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return bool(self.errors)


@dataclass
class SlopeReport:
    """Per-segment slope signs for the saving sum and the investment curve."""

    segment_rates: np.ndarray        # midpoints of the grid segments
    saving_sum_slope: np.ndarray
    i0_slope: np.ndarray
    flagged_segments: list[int]      # saving sum not upward in partial mode


def default_grid(r_ref: float, points: int = 41, half_width: float = 0.2) -> np.ndarray:
    """Rate grid centered on r_ref, floored at 0.01."""
    return np.linspace(max(0.01, r_ref - half_width), r_ref + half_width, points)


def _slopes(grid, curves):
    out = {}
    for name, values in curves.items():
        out[name] = np.gradient(values, grid)
    out["saving_sum"] = np.gradient(curves["s0n"] + curves["s1x"], grid)
    return out


def compute_schedules(instance: ModelInstance, grid, mode: str = "full_equilibrium",
                      r_ref: float | None = None) -> ScheduleCurve:
    """Evaluate the three schedules on `grid`.

    Points where the model is inadmissible are recorded in `errors`, set to
    NaN, and flag the curve.  Partial mode requires r_ref inside the grid
    span.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("grid must be a non-empty 1-d array of rates")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly increasing")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "partial":
        if r_ref is None:
            raise ValueError("partial mode needs a reference rate r_ref")
        if not grid[0] <= r_ref <= grid[-1]:
            raise ValueError("r_ref must lie within the grid span")

    n = grid.size
    i0 = np.full(n, np.nan)
    s0n = np.full(n, np.nan)
    s1x = np.full(n, np.nan)
    y0 = np.full(n, np.nan)
    errors: list[tuple[int, str]] = []

    if mode == "full_equilibrium":
        for j, r in enumerate(grid):
            try:
                eq = solve_at_rate(instance, r)
            except (DomainError, InfeasibleError) as exc:
                errors.append((j, str(exc)))
                continue
            i0[j], s0n[j], s1x[j], y0[j] = eq.i0, eq.s0n, eq.s1x, eq.y0
    else:
        ref = solve_at_rate(instance, r_ref)
        d, t, f, p = (instance.demography, instance.technology,
                      instance.fiscal, instance.preferences)
        inc0 = ref.w0 * ref.l0 + ref.x0 - ref.tax0
        inc1 = ref.w1 * ref.l1 + ref.x1 - ref.tax1
        for j, r in enumerate(grid):
            try:
                check_rate(t, r)
                k1 = capital_demand(t, ref.L1, r)
                c0 = (inc0 + inc1 / (1.0 + r)) / q_factor(p, r)
            except (DomainError, InfeasibleError) as exc:
                errors.append((j, str(exc)))
                continue
            i0[j] = k1 - (1.0 - t.delta) * instance.k0
            s0n[j] = ref.y0 - d.n0 * c0 - f.g0
            s1x[j] = ref.tb1 / (1.0 + r)
            y0[j] = ref.y0

    residual = s0n + s1x - i0
    slopes = _slopes(grid, {"i0": i0, "s0n": s0n, "s1x": s1x})
    return ScheduleCurve(grid=grid, i0=i0, s0n=s0n, s1x=s1x, residual=residual,
                         y0=y0, slopes=slopes, mode=mode, r_ref=r_ref,
                         errors=errors)


def slope_check(curve: ScheduleCurve) -> SlopeReport:
    """Per-segment slope signs; flags non-upward saving segments in partial mode.

    An upward-sloping saving sum (against the downward investment schedule)
    is the local-stability condition behind the crossing geometry; in full
    mode the sum tracks investment identically, so nothing is flagged.
    """
    if curve.grid.size < 3:
        raise ValueError("slope check needs at least 3 grid points")
    d_r = np.diff(curve.grid)
    saving_sum = curve.s0n + curve.s1x
    d_sum = np.diff(saving_sum) / d_r
    d_i0 = np.diff(curve.i0) / d_r
    flagged = []
    if curve.mode == "partial":
        flagged = [int(j) for j in np.flatnonzero(d_sum <= 0)]
    return SlopeReport(
        segment_rates=0.5 * (curve.grid[:-1] + curve.grid[1:]),
        saving_sum_slope=d_sum,
        i0_slope=d_i0,
        flagged_segments=flagged,
    )
