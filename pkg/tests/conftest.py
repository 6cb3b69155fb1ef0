import sys

import pytest
from hypothesis import HealthCheck, settings

from montdiv import make_ctx

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

Q64 = 16357897499336320049
QINV64 = 9366409592816252113
X977 = (1 << 977) - 1
R977 = 8623243291871090711

Q128 = 225797717267637708506527464987314161
QINV128 = 98317950452290864966529955359911823633
X128 = 153238840814299457340643142885404331762436489574620087


@pytest.fixture(scope="session")
def ctx64():
    return make_ctx(Q64)


@pytest.fixture(scope="session")
def ctx128():
    return make_ctx(Q128)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
