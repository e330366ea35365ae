"""Shared test configuration.

The acceptance module registers one line per criterion here; the summary
is printed after the test run so the pass/fail status of each criterion is
visible in one place.
"""

import hypothesis

hypothesis.settings.register_profile(
    "exact", deadline=None, max_examples=60, derandomize=True
)
hypothesis.settings.load_profile("exact")

ACCEPTANCE_RESULTS = {}


def record_acceptance(number, label, ok, detail=""):
    ACCEPTANCE_RESULTS[number] = (label, bool(ok), detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        label, ok, detail = ACCEPTANCE_RESULTS[number]
        line = "criterion %d (%s): %s" % (number, label, "PASS" if ok else "FAIL")
        if detail:
            line += " -- " + detail
        terminalreporter.write_line(line)
