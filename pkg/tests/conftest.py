import random
import sys

import pytest

from spfactor.rings import GFpX, QQ, ZZ, ZZ_half

ALL_RINGS = [ZZ, QQ, ZZ_half, GFpX(5)]
TWO_UNIT_RINGS = [QQ, ZZ_half, GFpX(5)]


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(params=ALL_RINGS, ids=lambda r: r.name)
def ring(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
