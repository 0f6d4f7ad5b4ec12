import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion -> list of (ok, detail), filled in by test_acceptance
CRITERIA: dict[int, list[tuple[bool, str]]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    CRITERIA.setdefault(n, []).append((bool(ok), detail))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        for ok, detail in CRITERIA[n]:
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
