"""Instance/scenario file parsing and deterministic serialization."""

from dataclasses import replace

import pytest

from openecon import solve_at_rate
from openecon.configio import (ParseError, csv_number, format_instance,
                               json_number, parse_instance, parse_scenarios,
                               to_csv, to_json)


class TestInstanceRoundTrip:
    def test_bit_identical_equilibria(self, baseline):
        tweaked = replace(baseline, k0=12345.6789,
                          preferences=replace(baseline.preferences,
                                              gamma=1.7000000000000002))
        recovered = parse_instance(format_instance(tweaked))
        assert recovered == tweaked
        a = solve_at_rate(tweaked, 0.4821)
        b = solve_at_rate(recovered, 0.4821)
        assert a == b

    def test_omitted_keys_default_to_baseline(self, baseline):
        parsed = parse_instance("gamma = 2.0\n")
        assert parsed.preferences.gamma == 2.0
        assert parsed.preferences.theta == baseline.preferences.theta
        assert parsed.k0 == baseline.k0

    def test_table_spellings_and_comments(self, baseline):
        parsed = parse_instance(
            "# calibration override\n"
            "A1 = 1.15   # productivity\n"
            "tax0 = 5\n"
            "K0 = 30000\n")
        assert parsed.technology.a1 == 1.15
        assert parsed.fiscal.t0 == 5.0
        assert parsed.k0 == 30000.0

    def test_unknown_key_errors(self):
        with pytest.raises(ParseError):
            parse_instance("sigma = 2.0\n")

    def test_malformed_lines(self):
        with pytest.raises(ParseError):
            parse_instance("gamma 2.0\n")
        with pytest.raises(ParseError):
            parse_instance("gamma = lots\n")


class TestScenarioFiles:
    def test_basic_sections(self):
        scenarios = parse_scenarios(
            "[baseline]\n"
            "rate = 0.4821\n"
            "\n"
            "[higher_gamma]\n"
            "rate = 0.4821\n"
            "perturb.gamma = 1.15\n"
            "\n"
            "[custom]\n"
            "rate = 0.5\n"
            "set.A1 = 1.2\n")
        assert [s.name for s in scenarios] == ["baseline", "higher_gamma",
                                               "custom"]
        assert scenarios[1].perturbations == {"gamma": 1.15}
        assert scenarios[2].overrides == {"a1": 1.2}

    def test_closure_block(self):
        (s,) = parse_scenarios(
            "[bt]\n"
            "closure = balanced_trade\n"
            "bracket = 0.4821, 2.0\n"
            "closure_tol = 1e-8\n")
        assert s.rate is None
        assert s.closure.kind == "balanced_trade"
        assert s.closure.bracket == (0.4821, 2.0)
        assert s.closure.tolerance == 1e-8

    def test_sweep_grid(self):
        (s,) = parse_scenarios(
            "[sweep]\n"
            "closure = welfare_sweep\n"
            "sweep_grid = 0.3, 0.5, 0.7\n")
        assert s.closure.grid == (0.3, 0.5, 0.7)

    def test_entry_before_header(self):
        with pytest.raises(ParseError):
            parse_scenarios("rate = 0.5\n")

    def test_unknown_scenario_key(self):
        with pytest.raises(ParseError):
            parse_scenarios("[x]\nrate = 0.5\nshock = 2\n")

    def test_section_missing_rate_and_closure(self):
        with pytest.raises(ParseError):
            parse_scenarios("[x]\nperturb.gamma = 1.1\n")


class TestNumericEmission:
    def test_json_number_stability(self):
        assert json_number(0.1 + 0.2) == 0.3
        assert json_number(96492.6712345678901) == float("96492.6712345679")

    def test_csv_number(self):
        assert csv_number(96492.6712) == "96492.7"
        assert csv_number(-0.15494) == "-0.15494"

    def test_to_json_sorted_and_deterministic(self):
        payload = {"b": 2.0, "a": [1.0, {"z": 0.1 + 0.2}]}
        out = to_json(payload)
        assert out == to_json(payload)
        assert out.index('"a"') < out.index('"b"')
        assert out.endswith("\n")

    def test_to_csv(self):
        assert to_csv([["r", "I0"], [0.4821, 33506.02]]) == \
            "r,I0\n0.4821,33506\n"
