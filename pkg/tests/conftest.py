"""Test-session plumbing: acceptance results summarized at the end of the run."""

ACCEPTANCE_RESULTS: list[tuple[str, str, float]] = []


def record_acceptance(name: str, status: str, seconds: float) -> None:
    ACCEPTANCE_RESULTS.append((name, status, seconds))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, status, seconds in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status:4s}  {name}  [{seconds:.1f}s]")
