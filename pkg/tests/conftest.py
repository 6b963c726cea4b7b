import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import CASES, SEED  # noqa: E402

CRITERIA = {
    1: "triple equivalence: residue == recursion == series (examples + 20 random specs)",
    2: "Example 1 equals binomials C(x,y), 0 <= y <= x <= 30",
    3: "Example 2 recursion equals the explicit chessboard sum, m in {2,3}",
    4: "Example 3 equals brute-force isolated-element counts, n <= 18; row 0 Fibonacci",
    5: "assembled generating functions match the stated closed forms",
    6: "amoeba census: lower bound equals hull lattice count (oracle values)",
    7: "Example 1 asymptotics along (2,1)",
    8: "Example 2 (m=2) asymptotics along (2,1)",
    9: "cone gating for Example 1",
    10: "property suites under a seeded randomized harness",
}

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    marks = getattr(report, "criteria", ())
    if not marks:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        for n in marks:
            _outcomes.setdefault(n, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = tuple(m.args[0] for m in item.iter_markers("criterion"))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    tr.write_line(f"property harness seed = {SEED}, cases per property = {CASES}")
    for n in sorted(CRITERIA):
        results = _outcomes.get(n)
        if not results:
            continue
        failed = [nid for nid, out in results if out != "passed"]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {n:2d}: {status}  {CRITERIA[n]}  "
                      f"({len(results) - len(failed)}/{len(results)} checks)")
        for nid in failed:
            tr.write_line(f"               failed: {nid}")
