"""The ten acceptance criteria at full trial counts, one test each.

Each test prints its [PASS]/[FAIL] line uncaptured so the lines appear in
the plain ``pytest -v`` log.
"""

import pytest

from fourqubit.acceptance import CHECKS, AcceptanceConfig

CONFIG = AcceptanceConfig()


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__.removeprefix("check_") for c in CHECKS])
def test_criterion(check, capsys):
    res = check(CONFIG)
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, res.line()
