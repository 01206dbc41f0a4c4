import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_criteria = pytest.StashKey[dict]()


@pytest.fixture
def record_criterion(request):
    """Call with (k, title, ok, detail); the line is printed in the terminal summary."""
    lines = request.config.stash.setdefault(_criteria, {})

    def record(k, title, ok, detail=""):
        lines[k] = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
        return ok
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_criteria, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
