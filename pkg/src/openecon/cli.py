"""Command-line front end.

Subcommands: solve, table, sweep, schedules, check.  Exit status 0 on
success/pass, 1 on a tolerance failure, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

import numpy as np

from . import acceptance, configio, reference, schedules
from .closure import (BracketError, ClosureSpec, ConvergenceError,
                      resolve_rate)
from .model import DomainError, InfeasibleError, solve_at_rate
from .scenarios import paper_suite, run_suite
from .reference import ROW_KEYS, ROW_LABELS, baseline_instance


def _add_common(parser):
    parser.add_argument("--instance-file", metavar="PATH",
                        help="flat key=value calibration file "
                             "(default: embedded baseline)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_rate_or_closure(parser):
    parser.add_argument("--rate", type=float,
                        help="per-period real interest rate")
    parser.add_argument("--closure",
                        choices=("fixed", "balanced_trade",
                                 "trade_share_target", "welfare_sweep"),
                        help="rate selection rule instead of an explicit rate")
    parser.add_argument("--bracket", metavar="LO,HI",
                        help="search bracket for root-finding closures")
    parser.add_argument("--target", type=float,
                        help="tb0/y0 target for trade_share_target")
    parser.add_argument("--tol", type=float,
                        help="tolerance override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="openecon",
        description="Two-period open-economy equilibrium with the interest "
                    "rate as an input")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one equilibrium at a rate")
    _add_common(p)
    _add_rate_or_closure(p)

    p = sub.add_parser("table", help="run the comparative-statics suite")
    _add_common(p)
    p.add_argument("--scenario-file", metavar="PATH",
                   help="scenario definitions (default: embedded suite)")
    p.add_argument("--tol", type=float,
                   help="reference tolerance override (default 2e-3)")

    p = sub.add_parser("sweep", help="resolve a closure rule, then solve")
    _add_common(p)
    _add_rate_or_closure(p)
    p.add_argument("--grid", metavar="START,STOP,POINTS",
                   help="rate grid for welfare_sweep")

    p = sub.add_parser("schedules", help="saving/investment curves on a rate grid")
    _add_common(p)
    p.add_argument("--rate", type=float, default=0.4821,
                   help="reference rate (default 0.4821)")
    p.add_argument("--grid", metavar="START,STOP,POINTS",
                   help="rate grid (default 41 points around the reference rate)")
    p.add_argument("--mode", choices=("full", "partial"), default="full")

    sub.add_parser("check", help="run the acceptance suite")
    return parser


def _load_instance(args):
    if getattr(args, "instance_file", None):
        return configio.read_instance(args.instance_file)
    return baseline_instance()


def _parse_grid(spec: str) -> np.ndarray:
    parts = spec.split(",")
    if len(parts) != 3:
        raise configio.ParseError("--grid must be START,STOP,POINTS")
    start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    if points < 2 or stop <= start:
        raise configio.ParseError("--grid needs STOP > START and POINTS >= 2")
    return np.linspace(start, stop, points)


def _closure_from_args(args) -> ClosureSpec | None:
    if not args.closure:
        return None
    kwargs = {}
    if args.bracket:
        lo, hi = (float(v) for v in args.bracket.split(","))
        kwargs["bracket"] = (lo, hi)
    if args.tol is not None:
        kwargs["tolerance"] = args.tol
    if args.closure == "fixed":
        kwargs["fixed_rate"] = args.rate
    if args.closure == "trade_share_target":
        kwargs["target_share"] = args.target
    if args.closure == "welfare_sweep":
        grid = getattr(args, "grid", None)
        if grid is None:
            raise configio.ParseError("welfare_sweep needs --grid")
        kwargs["grid"] = tuple(_parse_grid(grid))
    return ClosureSpec(kind=args.closure, **kwargs)


def _pick_rate(instance, args):
    spec = _closure_from_args(args)
    if spec is not None:
        return resolve_rate(instance, spec)
    if args.rate is None:
        raise configio.ParseError("either --rate or --closure is required")
    return args.rate, None


def _emit_equilibrium(eq, fmt, out, diagnostics=None):
    payload = dataclasses.asdict(eq)
    if fmt == "json":
        if diagnostics is not None:
            payload = {"equilibrium": payload, "closure": {
                "kind": diagnostics.kind,
                "iterations": diagnostics.iterations,
                "evaluations": diagnostics.evaluations,
                "converged": diagnostics.converged,
                "residual": diagnostics.residual,
            }}
        out.write(configio.to_json(payload))
    else:
        rows = [[key, value] for key, value in payload.items()]
        if diagnostics is not None:
            rows.append(["closure_kind", diagnostics.kind])
            rows.append(["closure_iterations", diagnostics.iterations])
        out.write(configio.to_csv(rows))


def cmd_solve(args, out, err) -> int:
    instance = _load_instance(args)
    rate, diag = _pick_rate(instance, args)
    eq = solve_at_rate(instance, rate)
    _emit_equilibrium(eq, args.format, out, diag)
    return 0


def cmd_table(args, out, err) -> int:
    instance = _load_instance(args)
    if args.scenario_file:
        scenario_list = configio.read_scenarios(args.scenario_file)
    else:
        scenario_list = paper_suite(args.tol if args.tol else 2e-3)
    report = run_suite(instance, scenario_list)

    if args.format == "json":
        payload = {"scenarios": [], "sign_checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in report.sign_checks]}
        for result in report.results:
            payload["scenarios"].append({
                "name": result.name,
                "rate": result.rate,
                "rows": result.rows,
                "reference": (result.reference.values
                              if result.reference else None),
                "deviations": result.deviations,
                "failed_rows": result.failed_rows,
                "error": result.error,
            })
        out.write(configio.to_json(payload))
    else:
        # one column per scenario, one row per result label
        header = ["row"] + [r.name for r in report.results]
        body = [[ROW_LABELS[key]]
                + [r.rows.get(key, float("nan")) for r in report.results]
                for key in ROW_KEYS]
        out.write(configio.to_csv([header] + body))

    failed = False
    for result in report.results:
        if result.error:
            err.write(f"{result.name}: error: {result.error}\n")
            failed = True
        for key in result.failed_rows:
            err.write(f"{result.name}: row {ROW_LABELS[key]} deviates by "
                      f"{result.deviations[key]:.3g} "
                      f"(tolerance {result.reference.tolerance:g})\n")
            failed = True
    for check in report.sign_checks:
        if not check.passed:
            err.write(f"sign check failed: {check.name}: {check.detail}\n")
            failed = True
    return 1 if failed else 0


def cmd_sweep(args, out, err) -> int:
    instance = _load_instance(args)
    if not args.closure:
        raise configio.ParseError("sweep requires --closure")
    rate, diag = _pick_rate(instance, args)
    eq = solve_at_rate(instance, rate)
    _emit_equilibrium(eq, args.format, out, diag)
    return 0


def cmd_schedules(args, out, err) -> int:
    instance = _load_instance(args)
    grid = (_parse_grid(args.grid) if args.grid
            else schedules.default_grid(args.rate))
    mode = "full_equilibrium" if args.mode == "full" else "partial"
    curve = schedules.compute_schedules(instance, grid, mode=mode,
                                        r_ref=args.rate)
    for index, message in curve.errors:
        err.write(f"grid point {index} (r={curve.grid[index]:.6g}) skipped: "
                  f"{message}\n")
    if args.format == "json":
        points = [{"r": float(r), "I0": float(i), "S0N": float(s0),
                   "S1X": float(s1), "residual": float(res)}
                  for r, i, s0, s1, res in zip(curve.grid, curve.i0,
                                               curve.s0n, curve.s1x,
                                               curve.residual)]
        out.write(configio.to_json({"mode": curve.mode, "points": points}))
    else:
        rows = [["r", "I0", "S0N", "S1X", "residual"]]
        rows += [[float(r), float(i), float(s0), float(s1), float(res)]
                 for r, i, s0, s1, res in zip(curve.grid, curve.i0, curve.s0n,
                                              curve.s1x, curve.residual)]
        out.write(configio.to_csv(rows))
    return 0


def cmd_check(args, out, err) -> int:
    results = acceptance.run_all(emit=lambda line: out.write(line + "\n"))
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "solve": cmd_solve,
    "table": cmd_table,
    "sweep": cmd_sweep,
    "schedules": cmd_schedules,
    "check": cmd_check,
}


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out, err)
    except (DomainError, InfeasibleError, BracketError, ConvergenceError,
            configio.ParseError, FileNotFoundError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
