acceptance_lines = []


def record_acceptance(k, failures):
    line = f"ACCEPTANCE {k}: {'PASS' if not failures else 'FAIL'}"
    acceptance_lines.append((k, line))
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(acceptance_lines):
        terminalreporter.write_line(line)
