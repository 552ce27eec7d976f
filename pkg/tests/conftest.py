import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion and fail on any bad check."""

    def record(number, title, checks):
        bad = [c for c in checks if not c[1]]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {number}: {status}  {title} ({len(checks) - len(bad)}/{len(checks)} checks)"
        print(line)
        request.config.stash[_LINES].append(line)
        detail = "\n".join(f"  {name}: expected {exp}, got {act}" for name, _, exp, act in bad)
        assert not bad, f"{line}\n{detail}"

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
