import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.TITLES):
        status = {True: "PASS", False: "FAIL"}.get(mod.RESULTS.get(n), "NOT RUN")
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {mod.TITLES[n]}")
