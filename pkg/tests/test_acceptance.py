"""One test per acceptance criterion; each prints its pass/fail line."""

import pytest

from hopfk import acceptance

LINES = []


@pytest.mark.parametrize("ident", [c[0] for c in acceptance.CRITERIA],
                         ids=[f"criterion-{c[0]:02d}" for c in acceptance.CRITERIA])
def test_criterion(ident):
    result = acceptance.run_criterion(ident, seed=0)
    LINES.append(result.line())
    print(result.line())
    assert result.passed, result.detail
    assert result.seconds < 5.0, f"criterion {ident} took {result.seconds:.1f}s"
