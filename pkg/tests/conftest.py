from _acceptance_log import RESULTS


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, status in sorted(RESULTS):
        terminalreporter.write_line("CRITERION %d [%s]: %s" % (number, label, status))
