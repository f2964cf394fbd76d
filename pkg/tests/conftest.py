import pytest

CRITERIA = {}


@pytest.fixture
def record():
    def _record(n, ok, note=""):
        CRITERIA[n] = (bool(ok), note)
        print("CRITERION %d: %s %s" % (n, "PASS" if ok else "FAIL", note))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, note = CRITERIA[n]
        terminalreporter.write_line("CRITERION %d: %s %s" % (n, "PASS" if ok else "FAIL", note))
