import pytest

from openecon import baseline_instance, solve_at_rate


@pytest.fixture
def baseline():
    return baseline_instance()


@pytest.fixture
def baseline_eq(baseline):
    return solve_at_rate(baseline, 0.4821)
