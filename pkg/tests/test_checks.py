"""The verify suites must all pass end to end, exactly as the CLI runs them."""

import pytest

from loopsl2.checks import SUITE_NAMES, run_suite


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_suite_passes(suite):
    results = run_suite(suite)
    assert results
    failed = [c.name for c in results if not c.passed]
    assert failed == []


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suite("nosuch")
