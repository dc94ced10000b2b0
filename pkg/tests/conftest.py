import sys


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(results):
        ok, line = results[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {line}")
