"""Acceptance gate: one test per criterion, each printing its PASS/FAIL line.

Criterion 8 fails by design: the capital-demand factor
(alpha/(delta+r))^(1/(1-alpha)) is hump-shaped in alpha (peak near 0.4615
at delta+r = 1.4821), so the claimed strict decrease over alpha in
[0.3, 0.7] cannot hold.  The criterion is implemented exactly as stated
and left red; see README.
"""

import pytest

from openecon.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA,
                         ids=[f"criterion_{i}" for i in
                              range(1, len(CRITERIA) + 1)])
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print(result.line())
    assert result.passed, result.detail
