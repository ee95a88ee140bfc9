import time

import pytest

from percwit.cli import REPORT_IDS, compute_row
from percwit.optimize import OptimizerConfig
from percwit.perceptron import FUNCTION_IDS
from percwit.witness import build_witness

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record and assert one acceptance criterion.

    Lines are replayed in the terminal summary, so the per-criterion
    verdicts stay visible under output capture.
    """
    def emit(num, slug, ok, detail=""):
        line = f"ACCEPTANCE {num:02d} {slug}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return emit


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(set(ACCEPTANCE_LINES)):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def default_report():
    """Report rows for all 12 functions at the default search config.

    Runs the full 64-restart search per function, so it is computed once
    and shared.  Values are (row, elapsed_seconds) keyed by function id.
    """
    cfg = OptimizerConfig()
    out = {}
    for fid in REPORT_IDS:
        t0 = time.perf_counter()
        row = compute_row(fid, cfg)
        out[fid] = (row, time.perf_counter() - t0)
    return out


@pytest.fixture(scope="session")
def witnesses():
    return {fid: build_witness(table) for fid, table in FUNCTION_IDS.items()
            if fid in REPORT_IDS}
