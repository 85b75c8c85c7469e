import pytest
from hypothesis import HealthCheck, settings

from digiplane import kernels

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

BACKENDS = kernels.available_backends()

# acceptance lines: nodeid -> detail text, filled by the ``criterion`` fixture
_DETAILS: dict[str, str] = {}
_OUTCOMES: dict[str, tuple[str, str]] = {}


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    monkeypatch.setattr(kernels, "backend", BACKENDS[request.param])
    return request.param


@pytest.fixture
def criterion(request):
    """Call with a detail string; the terminal summary prints it with the outcome."""
    def record(detail: str) -> None:
        _DETAILS[request.node.nodeid] = detail
        print(detail)
    return record


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _OUTCOMES[report.nodeid] = (name, "PASS" if report.outcome == "passed" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (name, verdict) in sorted(_OUTCOMES.items(), key=lambda kv: kv[1][0]):
        detail = _DETAILS.get(nodeid, "")
        terminalreporter.write_line(f"{verdict} {name}: {detail}".rstrip(": "))
