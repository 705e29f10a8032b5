import random
from pathlib import Path

import pytest

from squeezebox import TraceRecord

DATA = Path(__file__).parent / "data"


def pytest_runtest_logreport(report):
    # acceptance tests tag themselves with record_property("criterion", ...)
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            verdict = "PASS" if report.passed else "FAIL"
            print(f"\ncriterion [{verdict}] {value}", flush=True)


@pytest.fixture
def golden_trace_path():
    return DATA / "golden_trace.csv"


@pytest.fixture
def golden_config_path():
    return DATA / "golden_config.json"


@pytest.fixture
def golden_log_path():
    return DATA / "golden_encode.log"


def make_light_trace(rng: random.Random, records: int = 30) -> list:
    """A random trace sparse enough that the link never falls behind.

    Gaps of at least 6 ms leave room for a full record's burst (at most
    14 messages, 13.44 ms worst case) only when edges are few, so edge
    count per record is capped at 2. Debounce (5 ms default) settles
    within one gap.
    """
    rows = []
    t = 0
    buttons = 0
    mode = False
    for _ in range(records):
        t += rng.randint(6, 20)
        for _ in range(rng.randint(0, 2)):
            buttons ^= 1 << rng.randrange(10)
        if rng.random() < 0.15:
            mode = not mode
        rows.append(
            TraceRecord(
                t_ms=t,
                squeeze=rng.random(),
                left=rng.random(),
                right=rng.random(),
                buttons=buttons,
                mode=int(mode),
            )
        )
    return rows
