import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import time

FULL_SUITE_LIMIT_S = 60.0
_session_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    elapsed = time.perf_counter() - _session_start
    verdict = "PASS" if elapsed < FULL_SUITE_LIMIT_S else "FAIL"
    terminalreporter.write_line(
        f"criterion 11 (suite wall clock < {FULL_SUITE_LIMIT_S:.0f} s): {verdict}  {elapsed:.1f} s"
    )
