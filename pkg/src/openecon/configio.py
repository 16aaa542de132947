"""Plain-text instance and scenario files, plus CSV/JSON emission helpers.

Instance files are flat `key = value` lines using the calibration-table
spellings (alpha, gamma, delta, theta, rho, phi, A0, A1, N0, N1, K0, tax0,
G0, G1, l0_max, l1_max, years_per_period).  Scenario files group lines
under `[name]` headers; inside a section, `set.<param> = v` overrides a
parameter, `perturb.<param> = f` scales it, and either `rate = r` or a
`closure = kind` block selects the rate.

Numeric output is deterministic: JSON carries 15 significant digits, CSV
carries 6.
"""

from __future__ import annotations

import json
import math
from dataclasses import replace

from .closure import ClosureSpec
from .model import (Demography, Fiscal, ModelInstance, Preferences,
                    Technology)
from .scenarios import Scenario, canonical_parameter
from .reference import baseline_instance


class ParseError(ValueError):
    """A config file line could not be interpreted."""


# ---------------------------------------------------------------------------
# Flat key-value parsing
# ---------------------------------------------------------------------------

def _parse_lines(text: str):
    """Yield (lineno, key, value) for `key = value` lines; '#' starts a comment."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line


def _split_kv(lineno: int, line: str) -> tuple[str, str]:
    if "=" not in line:
        raise ParseError(f"line {lineno}: expected 'key = value', got {line!r}")
    key, value = line.split("=", 1)
    return key.strip(), value.strip()


def _as_float(lineno: int, key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ParseError(f"line {lineno}: {key} = {value!r} is not a number") from None


def parse_instance(text: str) -> ModelInstance:
    """Build an instance from flat key-value text; unknown keys are errors.

    Keys omitted from the file keep their embedded-baseline values.
    """
    values: dict[str, float] = {}
    for lineno, line in _parse_lines(text):
        key, value = _split_kv(lineno, line)
        try:
            path = canonical_parameter(key)
        except KeyError:
            raise ParseError(f"line {lineno}: unknown parameter {key!r}") from None
        values[path] = _as_float(lineno, key, value)

    instance = baseline_instance()
    p, t, d, f = (instance.preferences, instance.technology,
                  instance.demography, instance.fiscal)
    pick = values.get
    p = replace(p, gamma=pick("gamma", p.gamma), theta=pick("theta", p.theta),
                rho=pick("rho", p.rho), phi=pick("phi", p.phi))
    t = replace(t, alpha=pick("alpha", t.alpha), delta=pick("delta", t.delta),
                a0=pick("a0", t.a0), a1=pick("a1", t.a1))
    d = replace(d, n0=pick("n0", d.n0), n1=pick("n1", d.n1),
                l0_max=pick("l0_max", d.l0_max), l1_max=pick("l1_max", d.l1_max))
    f = replace(f, g0=pick("g0", f.g0), g1=pick("g1", f.g1), t0=pick("t0", f.t0))
    return ModelInstance(preferences=p, technology=t, demography=d, fiscal=f,
                         k0=pick("k0", instance.k0),
                         years_per_period=pick("years_per_period",
                                               instance.years_per_period))


def format_instance(instance: ModelInstance) -> str:
    """Serialize an instance so that re-parsing reproduces it bit for bit."""
    p, t, d, f = (instance.preferences, instance.technology,
                  instance.demography, instance.fiscal)
    pairs = [
        ("alpha", t.alpha), ("gamma", p.gamma), ("delta", t.delta),
        ("theta", p.theta), ("rho", p.rho), ("phi", p.phi),
        ("A0", t.a0), ("A1", t.a1), ("N0", d.n0), ("N1", d.n1),
        ("K0", instance.k0), ("tax0", f.t0), ("G0", f.g0), ("G1", f.g1),
        ("l0_max", d.l0_max), ("l1_max", d.l1_max),
        ("years_per_period", instance.years_per_period),
    ]
    return "".join(f"{key} = {value!r}\n" for key, value in pairs)


def read_instance(path: str) -> ModelInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(path: str, instance: ModelInstance) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_instance(instance))


# ---------------------------------------------------------------------------
# Scenario files
# ---------------------------------------------------------------------------

_CLOSURE_KEYS = ("closure", "bracket", "target", "closure_tol",
                 "max_iterations", "sweep_grid")


def _build_closure(lineno: int, entries: dict[str, str]) -> ClosureSpec:
    kind = entries["closure"]
    kwargs = {}
    if "bracket" in entries:
        parts = entries["bracket"].split(",")
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: bracket must be 'lo,hi'")
        kwargs["bracket"] = (float(parts[0]), float(parts[1]))
    if "target" in entries:
        kwargs["target_share"] = float(entries["target"])
    if "closure_tol" in entries:
        kwargs["tolerance"] = float(entries["closure_tol"])
    if "max_iterations" in entries:
        kwargs["max_iterations"] = int(entries["max_iterations"])
    if "sweep_grid" in entries:
        kwargs["grid"] = tuple(float(v) for v in entries["sweep_grid"].split(","))
    if "rate" in entries and kind == "fixed":
        kwargs["fixed_rate"] = float(entries["rate"])
    try:
        return ClosureSpec(kind=kind, **kwargs)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def parse_scenarios(text: str) -> list[Scenario]:
    """Parse a scenario file into Scenario objects, preserving order."""
    sections: list[tuple[int, str, dict[str, str]]] = []
    current: dict[str, str] | None = None
    for lineno, line in _parse_lines(text):
        if line.startswith("[") and line.endswith("]"):
            current = {}
            sections.append((lineno, line[1:-1].strip(), current))
            continue
        key, value = _split_kv(lineno, line)
        if current is None:
            raise ParseError(f"line {lineno}: scenario entry before any [name] header")
        current[key] = value

    scenarios = []
    for lineno, name, entries in sections:
        overrides: dict[str, float] = {}
        perturbations: dict[str, float] = {}
        rate = None
        closure = None
        for key, value in entries.items():
            if key == "rate":
                rate = _as_float(lineno, key, value)
            elif key.startswith("set."):
                overrides[_scenario_param(lineno, key[4:])] = \
                    _as_float(lineno, key, value)
            elif key.startswith("perturb."):
                perturbations[_scenario_param(lineno, key[8:])] = \
                    _as_float(lineno, key, value)
            elif key in _CLOSURE_KEYS:
                pass  # handled below
            else:
                raise ParseError(f"line {lineno}: unknown scenario key {key!r}")
        if "closure" in entries:
            closure = _build_closure(lineno, entries)
            if closure.kind == "fixed":
                rate = None  # the closure carries the rate
        try:
            scenarios.append(Scenario(name=name, rate=rate, overrides=overrides,
                                      perturbations=perturbations, closure=closure))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return scenarios


def _scenario_param(lineno: int, name: str) -> str:
    try:
        return canonical_parameter(name)
    except KeyError:
        raise ParseError(f"line {lineno}: unknown parameter {name!r}") from None


def read_scenarios(path: str) -> list[Scenario]:
    with open(path, encoding="utf-8") as fh:
        return parse_scenarios(fh.read())


# ---------------------------------------------------------------------------
# Deterministic numeric emission
# ---------------------------------------------------------------------------

def json_number(x: float) -> float:
    """Round to 15 significant digits for byte-stable JSON output."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        return x
    if math.isnan(x) or math.isinf(x):
        return x
    return float(f"{x:.15g}")


def csv_number(x: float) -> str:
    """6 significant digits for CSV output."""
    if isinstance(x, bool):
        return str(x).lower()
    return f"{x:.6g}"


def to_json(payload) -> str:
    """Serialize with stable key order and 15-significant-digit floats."""
    def walk(node):
        if isinstance(node, dict):
            return {k: walk(v) for k, v in node.items()}
        if isinstance(node, (list, tuple)):
            return [walk(v) for v in node]
        if isinstance(node, float):
            return json_number(node)
        return node

    return json.dumps(walk(payload), indent=2, sort_keys=True) + "\n"


def to_csv(rows: list[list]) -> str:
    """Render rows of strings/numbers as simple comma-separated text."""
    rendered = []
    for row in rows:
        rendered.append(",".join(
            cell if isinstance(cell, str) else csv_number(cell) for cell in row))
    return "\n".join(rendered) + "\n"
