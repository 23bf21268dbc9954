"""Shared test configuration: the acceptance suite registers one line per
criterion here, printed in the terminal summary so a plain pytest run shows
the pass/fail ledger."""

acceptance_results: list[tuple[str, bool, str]] = []


def record_acceptance(name: str, passed: bool, detail: str = "") -> None:
    acceptance_results.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in acceptance_results:
        status = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"{status}  {name}{suffix}")
