import sys

import pytest
from hypothesis import HealthCheck, settings

from coulomb4 import REFERENCE_SETS

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=sorted(REFERENCE_SETS))
def reference(request):
    return REFERENCE_SETS[request.param]


@pytest.fixture(params=[n for n in sorted(REFERENCE_SETS) if n.startswith("G")])
def ground_reference(request):
    return REFERENCE_SETS[request.param]


@pytest.fixture(params=[n for n in sorted(REFERENCE_SETS) if n.startswith("E")])
def excited_reference(request):
    return REFERENCE_SETS[request.param]


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", {})
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number].line())
