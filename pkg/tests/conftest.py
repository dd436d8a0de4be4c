from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=500,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("suite")

import pytest

CRITERIA = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[CRITERIA] = []


@pytest.fixture
def criterion(request):
    """Record and print a PASS/FAIL line for one acceptance criterion."""
    lines = request.config.stash[CRITERIA]

    def report(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {label}" + (f": {detail}" if detail else "")
        print(line)
        lines.append(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(CRITERIA, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
