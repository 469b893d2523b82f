import re

ACCEPTANCE_FILE = "test_acceptance.py"
_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if ACCEPTANCE_FILE not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.failed:
        _outcomes[n] = "FAIL"
    elif report.when == "call" and n not in _outcomes:
        _outcomes[n] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA, SEED

    tr = terminalreporter
    tr.section(f"acceptance criteria (seed {SEED})")
    for n, text in sorted(CRITERIA.items()):
        tr.write_line(f"{_outcomes.get(n, 'NOT RUN'):7} {n:2d}. {text}")
