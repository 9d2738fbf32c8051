"""One test per acceptance criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion. All comparisons are exact (Fraction or integer equality); the only
tolerances are the wall-clock limits pinned below.
"""

import pytest

from flagdeg import acceptance

SEED = 0
PINNED_RUNTIME_LIMITS = {1: 300.0, 4: 60.0, 7: 600.0}


def test_runtime_limits_are_pinned():
    assert acceptance.RUNTIME_LIMITS == PINNED_RUNTIME_LIMITS


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number):
    result = acceptance.CRITERIA[number](SEED)
    print("\n" + result.line())
    detail = "\n".join(str(f) for f in result.failures[:10])
    assert result.passed, f"criterion {number} failed:\n{detail}"
