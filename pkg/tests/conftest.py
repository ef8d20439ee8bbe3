def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance gate's per-criterion lines past output capture."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
