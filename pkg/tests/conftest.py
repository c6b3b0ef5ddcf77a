import time

import pytest

from pictex.context import Picture
from pictex.fixed import UNITY

PT = UNITY


def pt(v) -> int:
    """Points (float or int) to sp, rounded."""
    return round(v * UNITY)


def to_pt(sp: int) -> float:
    return sp / UNITY


@pytest.fixture
def pic():
    return Picture()


def dots(p):
    return [(it.x, it.y) for it in p.canvas.items if it.kind == "dot"]


def rules(p):
    return [it for it in p.canvas.items if it.kind == "rule"]


# -- acceptance report: tests append (criterion, check, ok, detail) and the
# summary prints one line per check plus a verdict per criterion.

ACCEPTANCE: list = []
_CLOCK = {}


def record(criterion: str, check: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.append((criterion, check, bool(ok), detail))
    return ok


def pytest_sessionstart(session):
    _CLOCK["t0"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    order = []
    for crit, *_ in ACCEPTANCE:
        if crit not in order:
            order.append(crit)
    for crit in order:
        rows = [r for r in ACCEPTANCE if r[0] == crit]
        verdict = "PASS" if all(r[2] for r in rows) else "FAIL"
        tr.write_line(f"{verdict}  {crit}")
        for _, check, ok, detail in rows:
            tr.write_line(f"    {'pass' if ok else 'FAIL'}  {check}" + (f": {detail}" if detail else ""))
    elapsed = time.perf_counter() - _CLOCK.get("t0", time.perf_counter())
    tr.write_line(f"{'PASS' if elapsed < 120 else 'FAIL'}  Runtime bound: "
                  f"whole session took {elapsed:.1f} s (limit 120 s)")
