from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# one line of sample export data per name; wrapped lines in the original listing
# are joined into single physical lines
LINE_1 = ("1;20Oct2006;17:30:36;192.1.28.3;control;ctl;;daemon;inbound;;;;;;;;;;"
          "started sending log to localhost")
LINE_20 = ("20;17Nov2006;14:10:43;fwfoomain01.foo.com;log;drop;;hme0;inbound;tcp;"
           "gwt.lab.foo.com;corelinkmain01.foo.com;45;22619 ;44;3;;;;;")
LINE_21 = ("21;17Nov2006;14:10:58;fwfoogw02.foo.com;log;accept;;hme1;inbound;udp;"
           "corelinkmain01.foo.com;ns4.foo.net.nz;ntp-udp;ntp-udp;76;2;;;;;")


@pytest.fixture
def snippet_path():
    return DATA / "snippet.log"


@pytest.fixture
def snippet_bytes(snippet_path):
    return snippet_path.read_bytes()


_criteria: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    label = marker.args[0]
    ok = report.passed
    # a criterion passes only if every test carrying its label passes
    if not ok or label not in _criteria:
        _criteria[label] = "PASS" if ok else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(s.split()[0]), s)):
        terminalreporter.write_line(f"{_criteria[label]}  criterion {label}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test checks")
