import time

import pytest
from hypothesis import settings

# root systems are built lazily on first use, which can blow a per-example deadline
settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")

_ACCEPTANCE: list[tuple[str, bool, str]] = []


class CriterionRecorder:
    def __init__(self, label: str):
        self.label = label
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start

    def finish(self, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((self.label, ok, f"{detail} ({self.elapsed:.2f}s)".strip()))
        return ok


@pytest.fixture
def criterion(request):
    def make(label: str) -> CriterionRecorder:
        return CriterionRecorder(label)

    return make


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
